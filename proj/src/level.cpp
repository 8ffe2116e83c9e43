#include "levelrep/level.hpp"

#include <algorithm>
#include <cassert>
#include <functional>

namespace levelrep {

UnboundVariable::UnboundVariable(VarId v)
    : std::runtime_error("unbound variable #" + std::to_string(v.id)), var_(v) {}

Level::Level() : node_(std::make_shared<const Node>()) {}

Level Level::succ(Level t) {
  return Level(std::make_shared<const Node>(Node{Kind::Succ, {}, {std::move(t)}}));
}

Level Level::max(Level a, Level b) {
  return Level(std::make_shared<const Node>(Node{Kind::Max, {}, {std::move(a), std::move(b)}}));
}

Level Level::imax(Level a, Level b) {
  return Level(std::make_shared<const Node>(Node{Kind::IMax, {}, {std::move(a), std::move(b)}}));
}

Level Level::var(VarId v) { return Level(std::make_shared<const Node>(Node{Kind::Var, v, {}})); }

Level Level::numeral(Nat n) {
  Level t;
  for (Nat i = 0; i < n; ++i) t = succ(std::move(t));
  return t;
}

const Level& Level::child() const {
  assert(kind() == Kind::Succ);
  return node_->kids[0];
}

const Level& Level::left() const {
  assert(kind() == Kind::Max || kind() == Kind::IMax);
  return node_->kids[0];
}

const Level& Level::right() const {
  assert(kind() == Kind::Max || kind() == Kind::IMax);
  return node_->kids[1];
}

VarId Level::var() const {
  assert(kind() == Kind::Var);
  return node_->v;
}

std::size_t Level::size() const {
  std::size_t n = 1;
  for (const auto& k : node_->kids) n += k.size();
  return n;
}

Nat Level::succ_depth() const {
  switch (kind()) {
    case Kind::Zero:
    case Kind::Var:
      return 0;
    case Kind::Succ:
      return child().succ_depth() + 1;
    case Kind::Max:
    case Kind::IMax:
      return std::max(left().succ_depth(), right().succ_depth());
  }
  return 0;
}

bool operator==(const Level& a, const Level& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  if (a.kind() == Level::Kind::Var) return a.var() == b.var();
  return std::equal(a.node_->kids.begin(), a.node_->kids.end(), b.node_->kids.begin(),
                    b.node_->kids.end());
}

Nat Valuation::at(VarId v) const {
  auto it = map_.find(v);
  if (it == map_.end()) throw UnboundVariable(v);
  return it->second;
}

Nat eval(const Level& t, const Valuation& sigma) {
  switch (t.kind()) {
    case Level::Kind::Zero:
      return 0;
    case Level::Kind::Succ:
      return checked_add(eval(t.child(), sigma), 1);
    case Level::Kind::Var:
      return sigma.at(t.var());
    case Level::Kind::Max:
      return std::max(eval(t.left(), sigma), eval(t.right(), sigma));
    case Level::Kind::IMax:
      return imax_nat(eval(t.left(), sigma), eval(t.right(), sigma));
  }
  return 0;
}

namespace {

void collect_vars(const Level& t, std::vector<VarId>& out) {
  switch (t.kind()) {
    case Level::Kind::Zero:
      return;
    case Level::Kind::Var:
      out.push_back(t.var());
      return;
    case Level::Kind::Succ:
      collect_vars(t.child(), out);
      return;
    case Level::Kind::Max:
    case Level::Kind::IMax:
      collect_vars(t.left(), out);
      collect_vars(t.right(), out);
      return;
  }
}

}  // namespace

VarSet vars(const Level& t) {
  std::vector<VarId> out;
  collect_vars(t, out);
  return VarSet(std::move(out));
}

Nat default_oracle_bound(const Level& a, const Level& b) {
  return std::max(a.succ_depth(), b.succ_depth()) + 3;
}

std::optional<Valuation> find_counterexample_leq(const Level& lhs, const Level& rhs, Nat bound) {
  VarSet vs = set_union(vars(lhs), vars(rhs));
  std::vector<VarId> ids(vs.begin(), vs.end());
  std::optional<Valuation> witness;
  for_each_grid_valuation(ids, bound, [&](const Valuation& sigma) {
    if (eval(lhs, sigma) > eval(rhs, sigma)) {
      witness = sigma;
      return true;
    }
    return false;
  });
  return witness;
}

}  // namespace levelrep
