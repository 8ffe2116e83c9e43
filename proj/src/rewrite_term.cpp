#include <cctype>
#include <map>
#include <unordered_map>

#include "levelrep/rewrite.hpp"

namespace levelrep::rewrite {

namespace {

SortExpr fixed(Sort s) { return {SortExpr::Tag::Fixed, s}; }
const SortExpr kElem{SortExpr::Tag::Elem, Sort::Bool};
const SortExpr kSet{SortExpr::Tag::SetOfElem, Sort::Bool};

Symbol sym(std::string name, std::vector<SortExpr> args, SortExpr result) {
  std::size_t n = args.size();
  return Symbol{std::move(name), n, std::move(args), result};
}

std::vector<Symbol> make_signature() {
  const auto B = fixed(Sort::Bool), N = fixed(Sort::Nat), L = fixed(Sort::Level),
             LS = fixed(Sort::SubLevel), NS = fixed(Sort::NatSet), LSS = fixed(Sort::SubLevelSet);
  // Order must follow the Sym enumeration.
  std::vector<Symbol> sig = {
      sym("true", {}, B),
      sym("false", {}, B),
      sym("and", {B, B}, B),
      sym("or", {B, B}, B),
      sym("not", {B}, B),
      sym("zeroN", {}, N),
      sym("succN", {N}, N),
      sym("plus", {N, N}, N),
      sym("maxN", {N, N}, N),
      sym("leqN", {N, N}, B),
      sym("eqN", {N, N}, B),
      sym("ltN", {N, N}, B),
      sym("ite", {B, kElem, kElem}, kElem),
      sym("nil", {}, kSet),
      sym("cons", {kElem, kSet}, kSet),
      sym("add", {kSet, kElem}, kSet),
      sym("union", {kSet, kSet}, kSet),
      sym("mem", {kElem, kSet}, B),
      sym("subset", {kSet, kSet}, B),
      sym("eqSet", {kSet, kSet}, B),
      sym("ordSet", {kSet, kSet}, B),
      sym("ltSet", {kSet, kSet}, B),
      sym("del", {kSet, kElem}, kSet),
      sym("leqE", {kElem, kElem}, B),
      sym("eqE", {kElem, kElem}, B),
      sym("ltE", {kElem, kElem}, B),
      sym("zeroL", {}, L),
      sym("succL", {L}, L),
      sym("maxL", {L, L}, L),
      sym("ruleL", {L, L}, L),
      sym("varL", {N}, L),
      sym("As", {NS, N, N}, LS),
      sym("Bs", {NS, N}, LS),
      sym("ordSL", {LS, LS}, B),
      sym("leqSL", {LS, LS}, B),
      sym("succSL", {LSS}, LSS),
      sym("maxHelper", {LSS, LS}, LSS),
      sym("condAdd", {B, LSS, LS}, LSS),
      sym("ruleHelper", {LS, L}, L),
      sym("ruleSL", {LS, LS}, L),
      sym("evalS", {LS, N, N}, L),
      sym("evalL", {L, N, N}, L),
      sym("maxS", {LSS}, L),
  };
  return sig;
}

}  // namespace

const std::vector<Symbol>& builtin_signature() {
  static const std::vector<Symbol> sig = make_signature();
  static_assert(static_cast<std::size_t>(Sym::Count_) == 43);
  return sig;
}

const Symbol& symbol(Sym s) { return builtin_signature()[static_cast<std::size_t>(s)]; }

std::optional<Sym> find_symbol(std::string_view name) {
  static const auto index = [] {
    std::unordered_map<std::string, Sym> m;
    const auto& sig = builtin_signature();
    for (std::size_t i = 0; i < sig.size(); ++i) m.emplace(sig[i].name, static_cast<Sym>(i));
    return m;
  }();
  auto it = index.find(std::string(name));
  if (it == index.end()) return std::nullopt;
  return it->second;
}

std::string sort_name(Sort s) {
  switch (s) {
    case Sort::Bool: return "B";
    case Sort::Nat: return "N";
    case Sort::Level: return "L";
    case Sort::SubLevel: return "LS";
    case Sort::NatSet: return "Set N";
    case Sort::SubLevelSet: return "Set LS";
  }
  return "?";
}

// ---------------------------------------------------------------------------

Term Term::app(Sym head, std::vector<Term> args) {
  if (args.size() != symbol(head).arity)
    throw std::invalid_argument("arity mismatch for symbol " + symbol(head).name);
  return Term(std::make_shared<const Node>(static_cast<std::int32_t>(head), std::move(args)));
}

Term Term::var(std::uint32_t index) {
  return Term(std::make_shared<const Node>(-static_cast<std::int32_t>(index) - 1, std::vector<Term>{}));
}

std::size_t Term::size() const {
  std::size_t n = 1;
  for (const auto& a : node_->args) n += a.size();
  return n;
}

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  if (a.node_->head != b.node_->head) return false;
  return a.node_->args == b.node_->args;
}

Term numeral(Nat n) {
  static const Term zero = Term::app(Sym::ZeroN);
  Term t = zero;
  for (Nat i = 0; i < n; ++i) t = Term::app(Sym::SuccN, {t});
  return t;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

class TermParser {
 public:
  explicit TermParser(std::string_view text) : text_(text) {}

  Pattern parse_all() {
    Term t = parse_app();
    skip_ws();
    if (pos_ != text_.size()) fail("trailing input");
    return Pattern{std::move(t), std::move(names_)};
  }

  // Used by the rule parser, which shares variable numbering across sides.
  Term parse_with(std::vector<std::string>& names, bool allow_new_vars) {
    names_ = std::move(names);
    allow_new_ = allow_new_vars;
    Term t = parse_app();
    skip_ws();
    if (pos_ != text_.size()) fail("trailing input");
    names = std::move(names_);
    return t;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string ident() {
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    if (start == pos_) fail("expected identifier");
    return std::string(text_.substr(start, pos_ - start));
  }

  bool at_atom_start() {
    skip_ws();
    if (pos_ >= text_.size()) return false;
    char c = text_[pos_];
    return c == '(' || c == '$' || std::isalpha(static_cast<unsigned char>(c)) || c == '_';
  }

  Term variable() {
    ++pos_;  // '$'
    std::string name = ident();
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == name) return Term::var(static_cast<std::uint32_t>(i));
    if (!allow_new_) fail("unbound pattern variable $" + name);
    names_.push_back(name);
    return Term::var(static_cast<std::uint32_t>(names_.size() - 1));
  }

  Sym head_symbol() {
    std::string name = ident();
    auto s = find_symbol(name);
    if (!s) fail("unknown symbol '" + name + "'");
    return *s;
  }

  // atom := '(' app ')' | '$' ident | ident   (constant or nullary use)
  Term atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    if (text_[pos_] == '(') {
      ++pos_;
      Term t = parse_app();
      skip_ws();
      if (pos_ >= text_.size() || text_[pos_] != ')') fail("expected ')'");
      ++pos_;
      return t;
    }
    if (text_[pos_] == '$') return variable();
    Sym s = head_symbol();
    if (symbol(s).arity != 0) fail("symbol '" + symbol(s).name + "' needs arguments here");
    return Term::app(s);
  }

  // app := '$' ident | ident atom*
  Term parse_app() {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == '(') return atom();
    if (pos_ < text_.size() && text_[pos_] == '$') return variable();
    Sym s = head_symbol();
    std::vector<Term> args;
    while (args.size() < symbol(s).arity && at_atom_start()) args.push_back(atom());
    if (args.size() != symbol(s).arity)
      fail("symbol '" + symbol(s).name + "' expects " + std::to_string(symbol(s).arity) + " arguments");
    return Term::app(s, std::move(args));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::vector<std::string> names_;
  bool allow_new_ = true;
};

void print_into(const Term& t, const std::vector<std::string>& names, bool nested, std::string& out) {
  if (t.is_var()) {
    out += '$';
    out += t.var_index() < names.size() ? names[t.var_index()] : std::to_string(t.var_index());
    return;
  }
  bool parens = nested && !t.args().empty();
  if (parens) out += '(';
  out += symbol(t.head()).name;
  for (const auto& a : t.args()) {
    out += ' ';
    print_into(a, names, true, out);
  }
  if (parens) out += ')';
}

}  // namespace

Pattern parse_pattern(std::string_view text) { return TermParser(text).parse_all(); }

Term parse_term(std::string_view text) {
  Pattern p = parse_pattern(text);
  if (!p.var_names.empty()) throw ParseError("ground term expected: '" + std::string(text) + "'");
  return p.term;
}

std::string print_term(const Term& t, const std::vector<std::string>& var_names) {
  std::string out;
  print_into(t, var_names, false, out);
  return out;
}

// Shared with the rule module.
Term parse_side(std::string_view text, std::vector<std::string>& names, bool allow_new_vars) {
  return TermParser(text).parse_with(names, allow_new_vars);
}

// ---------------------------------------------------------------------------
// Sorts

namespace {

// Inference sorts: the concrete ones plus "set of something not yet known".
enum class ISort : std::uint8_t { Bool, Nat, Level, SubLevel, NatSet, SubLevelSet, AnySet };

ISort lift(Sort s) { return static_cast<ISort>(s); }
bool is_set(ISort s) { return s == ISort::NatSet || s == ISort::SubLevelSet || s == ISort::AnySet; }

std::optional<ISort> unify(ISort a, ISort b) {
  if (a == b) return a;
  if (a == ISort::AnySet && is_set(b)) return b;
  if (b == ISort::AnySet && is_set(a)) return a;
  return std::nullopt;
}

std::optional<ISort> element_of(ISort set) {
  if (set == ISort::NatSet) return ISort::Nat;
  if (set == ISort::SubLevelSet) return ISort::SubLevel;
  return std::nullopt;
}

std::optional<ISort> set_of(ISort elem) {
  if (elem == ISort::Nat) return ISort::NatSet;
  if (elem == ISort::SubLevel) return ISort::SubLevelSet;
  return std::nullopt;
}

std::optional<ISort> infer(const Term& t) {
  if (t.is_var()) return std::nullopt;
  const Symbol& s = symbol(t.head());
  bool set_symbol = false;
  for (const auto& a : s.args) set_symbol |= a.tag == SortExpr::Tag::SetOfElem;
  set_symbol |= s.result.tag == SortExpr::Tag::SetOfElem;

  std::optional<ISort> param;  // binding of the sort parameter
  auto bind = [&](ISort v) -> bool {
    if (!param) {
      param = v;
      return true;
    }
    auto u = unify(*param, v);
    if (!u) return false;
    param = u;
    return true;
  };

  for (std::size_t i = 0; i < s.arity; ++i) {
    auto a = infer(t.arg(i));
    if (!a) return std::nullopt;
    switch (s.args[i].tag) {
      case SortExpr::Tag::Fixed:
        if (!unify(*a, lift(s.args[i].fixed))) return std::nullopt;
        break;
      case SortExpr::Tag::Elem:
        if (set_symbol && !set_of(*a)) return std::nullopt;
        if (!bind(*a)) return std::nullopt;
        break;
      case SortExpr::Tag::SetOfElem:
        if (!is_set(*a)) return std::nullopt;
        if (auto e = element_of(*a); e && !bind(*e)) return std::nullopt;
        break;
    }
  }
  switch (s.result.tag) {
    case SortExpr::Tag::Fixed:
      return lift(s.result.fixed);
    case SortExpr::Tag::Elem:
      return param;
    case SortExpr::Tag::SetOfElem:
      if (!param) return ISort::AnySet;
      return set_of(*param);
  }
  return std::nullopt;
}

}  // namespace

std::optional<Sort> sort_of(const Term& t) {
  auto s = infer(t);
  if (!s) return std::nullopt;
  if (*s == ISort::AnySet) return Sort::NatSet;
  return static_cast<Sort>(*s);
}

}  // namespace levelrep::rewrite
