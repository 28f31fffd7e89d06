#include "hocm/symbols.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <functional>
#include <random>
#include <sstream>

namespace hocm {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

NodePtr make_node(SymbolNode n) { return std::make_shared<const SymbolNode>(std::move(n)); }

NodePtr const_node(std::complex<double> v) {
  SymbolNode n;
  n.kind = SymbolNode::Kind::constant;
  n.value = v;
  return make_node(std::move(n));
}

NodePtr var_node(VarKind k, int idx) {
  SymbolNode n;
  n.kind = SymbolNode::Kind::variable;
  n.var = k;
  n.var_index = idx;
  return make_node(std::move(n));
}

NodePtr binary_node(SymbolNode::Kind kind, NodePtr a, NodePtr b) {
  SymbolNode n;
  n.kind = kind;
  n.a = std::move(a);
  n.b = std::move(b);
  return make_node(std::move(n));
}

NodePtr unary_node(SymbolNode::Kind kind, NodePtr a) {
  SymbolNode n;
  n.kind = kind;
  n.a = std::move(a);
  return make_node(std::move(n));
}

NodePtr pow_node(NodePtr a, int e) {
  SymbolNode n;
  n.kind = SymbolNode::Kind::pow;
  n.a = std::move(a);
  n.exponent = e;
  return make_node(std::move(n));
}

bool node_contains_exp(const NodePtr& p) {
  if (!p) return false;
  if (p->kind == SymbolNode::Kind::exp_fn) return true;
  return node_contains_exp(p->a) || node_contains_exp(p->b);
}

// total degree; -1 marks "not a polynomial"
int node_degree(const NodePtr& p) {
  using K = SymbolNode::Kind;
  switch (p->kind) {
    case K::constant:
      return 0;
    case K::variable:
      return 1;
    case K::h0:
      return 2;
    case K::add:
    case K::sub: {
      const int da = node_degree(p->a), db = node_degree(p->b);
      if (da < 0 || db < 0) return -1;
      return std::max(da, db);
    }
    case K::mul: {
      const int da = node_degree(p->a), db = node_degree(p->b);
      if (da < 0 || db < 0) return -1;
      return da + db;
    }
    case K::neg:
      return node_degree(p->a);
    case K::pow: {
      const int da = node_degree(p->a);
      if (da < 0) return -1;
      return da * p->exponent;
    }
    case K::exp_fn:
      return -1;
  }
  return -1;
}

std::complex<double> node_eval(const SymbolNode& nd, const PhasePoint& w) {
  using K = SymbolNode::Kind;
  switch (nd.kind) {
    case K::constant:
      return nd.value;
    case K::variable: {
      const size_t i = static_cast<size_t>(nd.var_index - 1);
      switch (nd.var) {
        case VarKind::x:
          return {w.x[i], 0.0};
        case VarKind::xi:
          return {w.xi[i], 0.0};
        case VarKind::z:
          return {w.x[i], w.xi[i]};
        case VarKind::zbar:
          return {w.x[i], -w.xi[i]};
      }
      return {};
    }
    case K::h0:
      return {0.5 * w.norm_sq(), 0.0};
    case K::add:
      return node_eval(*nd.a, w) + node_eval(*nd.b, w);
    case K::sub:
      return node_eval(*nd.a, w) - node_eval(*nd.b, w);
    case K::mul:
      return node_eval(*nd.a, w) * node_eval(*nd.b, w);
    case K::neg:
      return -node_eval(*nd.a, w);
    case K::pow: {
      std::complex<double> v{1.0, 0.0};
      const std::complex<double> base = node_eval(*nd.a, w);
      for (int j = 0; j < nd.exponent; ++j) v *= base;
      return v;
    }
    case K::exp_fn:
      return std::exp(node_eval(*nd.a, w));
  }
  return {};
}

std::string format_double(double v) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

// precedence levels for printing: 0 add/sub, 1 mul, 2 unary neg, 3 pow, 4 atom
int node_level(const SymbolNode& nd) {
  using K = SymbolNode::Kind;
  switch (nd.kind) {
    case K::add:
    case K::sub:
      return 0;
    case K::mul:
      return 1;
    case K::neg:
      return 2;
    case K::pow:
      return 3;
    default:
      return 4;
  }
}

void node_print(const SymbolNode& nd, std::ostream& os) {
  using K = SymbolNode::Kind;
  auto wrapped = [&os](const SymbolNode& child, int min_level) {
    if (node_level(child) < min_level) {
      os << '(';
      node_print(child, os);
      os << ')';
    } else {
      node_print(child, os);
    }
  };
  switch (nd.kind) {
    case K::constant: {
      const double re = nd.value.real(), im = nd.value.imag();
      if (im == 0.0) {
        if (re < 0) {
          os << '(' << format_double(re) << ')';
        } else {
          os << format_double(re);
        }
      } else if (re == 0.0 && im == 1.0) {
        os << 'i';
      } else {
        os << '(' << format_double(re) << '+' << format_double(im) << "*i)";
      }
      return;
    }
    case K::variable: {
      static const char* kind_names[] = {"x", "xi", "z", "zb"};
      os << kind_names[static_cast<int>(nd.var)] << nd.var_index;
      return;
    }
    case K::h0:
      os << "h0";
      return;
    case K::add:
      wrapped(*nd.a, 0);
      os << '+';
      wrapped(*nd.b, 1);  // right operand needs a higher level to round-trip a-(b sub-tree)
      return;
    case K::sub:
      wrapped(*nd.a, 0);
      os << '-';
      wrapped(*nd.b, 1);
      return;
    case K::mul:
      wrapped(*nd.a, 1);
      os << '*';
      wrapped(*nd.b, 2);
      return;
    case K::neg:
      os << '-';
      wrapped(*nd.a, 2);
      return;
    case K::pow:
      wrapped(*nd.a, 4);
      os << '^' << nd.exponent;
      return;
    case K::exp_fn:
      os << "exp(";
      node_print(*nd.a, os);
      os << ')';
      return;
  }
}

bool node_equal(const NodePtr& a, const NodePtr& b) {
  if (!a || !b) return a == b;
  if (a->kind != b->kind) return false;
  using K = SymbolNode::Kind;
  switch (a->kind) {
    case K::constant:
      return a->value.real() == b->value.real() && a->value.imag() == b->value.imag();
    case K::variable:
      return a->var == b->var && a->var_index == b->var_index;
    case K::h0:
      return true;
    case K::pow:
      return a->exponent == b->exponent && node_equal(a->a, b->a);
    case K::neg:
    case K::exp_fn:
      return node_equal(a->a, b->a);
    case K::add:
    case K::sub:
    case K::mul:
      return node_equal(a->a, b->a) && node_equal(a->b, b->b);
  }
  return false;
}

int max_var_index(const NodePtr& p) {
  if (!p) return 0;
  int m = (p->kind == SymbolNode::Kind::variable) ? p->var_index : 0;
  return std::max({m, max_var_index(p->a), max_var_index(p->b)});
}

}  // namespace

std::string to_string(SymbolClass c) {
  switch (c) {
    case SymbolClass::polynomial:
      return "polynomial";
    case SymbolClass::schwartz:
      return "schwartz";
    case SymbolClass::poly_bounded:
      return "poly-bounded";
  }
  return "?";
}

SymbolClass symbol_class_from_string(const std::string& s) {
  if (s == "polynomial") return SymbolClass::polynomial;
  if (s == "schwartz") return SymbolClass::schwartz;
  if (s == "poly-bounded") return SymbolClass::poly_bounded;
  throw std::invalid_argument("unknown symbol class: " + s);
}

SymbolExpr::SymbolExpr(NodePtr root, int n, SymbolClass cls) : root_(std::move(root)), n_(n), cls_(cls) {
  if (n_ < 1) throw std::invalid_argument("SymbolExpr: dimension must be >= 1");
  if (max_var_index(root_) > n_) throw std::invalid_argument("SymbolExpr: variable index exceeds dimension");
}

std::complex<double> SymbolExpr::eval(const PhasePoint& w) const {
  if (!root_) throw std::logic_error("SymbolExpr: empty expression");
  if (w.dim() != n_) throw std::invalid_argument("SymbolExpr: point dimension mismatch");
  return node_eval(*root_, w);
}

bool SymbolExpr::contains_exp() const { return node_contains_exp(root_); }

int SymbolExpr::poly_degree() const { return root_ ? node_degree(root_) : 0; }

std::string SymbolExpr::to_string() const {
  if (!root_) return "0";
  std::ostringstream os;
  node_print(*root_, os);
  return os.str();
}

bool SymbolExpr::same_tree(const SymbolExpr& o) const {
  return n_ == o.n_ && node_equal(root_, o.root_);
}

SymbolExpr SymbolExpr::with_class(SymbolClass cls) const {
  if (cls == SymbolClass::polynomial && contains_exp())
    throw std::invalid_argument("class polynomial requires an exp-free expression");
  if (cls == SymbolClass::schwartz) {
    if (!contains_exp())
      throw std::invalid_argument("class schwartz requires exponential decay; expression is polynomial");
    // decay probe along a fixed ray fan; rejects exp of a quadratic that fails
    // to be negative definite along some ray
    for (int axis = 0; axis < 2 * n_ + 1; ++axis) {
      PhasePoint dir(std::vector<double>(static_cast<size_t>(n_), 0.0),
                     std::vector<double>(static_cast<size_t>(n_), 0.0));
      if (axis < n_) {
        dir.x[static_cast<size_t>(axis)] = 1.0;
      } else if (axis < 2 * n_) {
        dir.xi[static_cast<size_t>(axis - n_)] = 1.0;
      } else {
        const double s = 1.0 / std::sqrt(2.0 * n_);
        dir.x.assign(static_cast<size_t>(n_), s);
        dir.xi.assign(static_cast<size_t>(n_), s);
      }
      double prev = -1.0;
      for (double r : {4.0, 8.0, 16.0}) {
        PhasePoint p = dir;
        for (double& v : p.x) v *= r;
        for (double& v : p.xi) v *= r;
        const double mag = std::abs(node_eval(*root_, p));
        if (prev >= 0.0 && mag > prev + 1e-12)
          throw std::invalid_argument("class schwartz rejected: |f| grows along a ray");
        prev = mag;
      }
    }
  }
  SymbolExpr e = *this;
  e.cls_ = cls;
  return e;
}

SymbolExpr SymbolExpr::constant(std::complex<double> v, int n) {
  return SymbolExpr(const_node(v), n, SymbolClass::polynomial);
}

SymbolExpr SymbolExpr::variable(VarKind kind, int index, int n) {
  if (index < 1 || index > n) throw std::invalid_argument("SymbolExpr::variable: index out of range");
  return SymbolExpr(var_node(kind, index), n, SymbolClass::polynomial);
}

SymbolExpr SymbolExpr::h0(int n) {
  SymbolNode nd;
  nd.kind = SymbolNode::Kind::h0;
  return SymbolExpr(make_node(std::move(nd)), n, SymbolClass::polynomial);
}

namespace {
SymbolClass combined_class(const SymbolExpr& a, const SymbolExpr& b) {
  if (a.sym_class() == SymbolClass::polynomial && b.sym_class() == SymbolClass::polynomial)
    return SymbolClass::polynomial;
  return SymbolClass::poly_bounded;
}
void require_same_dim(const SymbolExpr& a, const SymbolExpr& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("symbol dimension mismatch");
}
}  // namespace

SymbolExpr operator+(const SymbolExpr& a, const SymbolExpr& b) {
  require_same_dim(a, b);
  return SymbolExpr(binary_node(SymbolNode::Kind::add, a.root(), b.root()), a.dim(), combined_class(a, b));
}

SymbolExpr operator-(const SymbolExpr& a, const SymbolExpr& b) {
  require_same_dim(a, b);
  return SymbolExpr(binary_node(SymbolNode::Kind::sub, a.root(), b.root()), a.dim(), combined_class(a, b));
}

SymbolExpr operator*(const SymbolExpr& a, const SymbolExpr& b) {
  require_same_dim(a, b);
  return SymbolExpr(binary_node(SymbolNode::Kind::mul, a.root(), b.root()), a.dim(), combined_class(a, b));
}

SymbolExpr operator-(const SymbolExpr& a) {
  // same canonical form as the parser: negated real literals stay literals
  if (a.root() && a.root()->kind == SymbolNode::Kind::constant && a.root()->value.imag() == 0.0)
    return SymbolExpr(const_node({-a.root()->value.real(), 0.0}), a.dim(), a.sym_class());
  return SymbolExpr(unary_node(SymbolNode::Kind::neg, a.root()), a.dim(), a.sym_class());
}

SymbolExpr SymbolExpr::pow(int e) const {
  if (e < 0) throw std::invalid_argument("pow: exponent must be nonnegative");
  return SymbolExpr(pow_node(root_, e), n_, cls_);
}

SymbolExpr SymbolExpr::exp_of() const {
  return SymbolExpr(unary_node(SymbolNode::Kind::exp_fn, root_), n_, SymbolClass::poly_bounded);
}

// ---------------------------------------------------------------------------
// parser

namespace {

struct Token {
  enum class Type { number, ident, plus, minus, star, caret, lparen, rparen, end } type;
  size_t pos = 0;
  double number = 0;
  std::string ident;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) { advance(); }
  const Token& peek() const { return tok_; }
  Token take() {
    Token t = tok_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (i_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[i_]))) ++i_;
    tok_ = Token{};
    tok_.pos = i_;
    if (i_ >= text_.size()) {
      tok_.type = Token::Type::end;
      return;
    }
    const char c = text_[i_];
    switch (c) {
      case '+':
        tok_.type = Token::Type::plus;
        ++i_;
        return;
      case '-':
        tok_.type = Token::Type::minus;
        ++i_;
        return;
      case '*':
        tok_.type = Token::Type::star;
        ++i_;
        return;
      case '^':
        tok_.type = Token::Type::caret;
        ++i_;
        return;
      case '(':
        tok_.type = Token::Type::lparen;
        ++i_;
        return;
      case ')':
        tok_.type = Token::Type::rparen;
        ++i_;
        return;
      default:
        break;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      const char* begin = text_.data() + i_;
      const char* end = text_.data() + text_.size();
      double v = 0;
      auto res = std::from_chars(begin, end, v);
      if (res.ec != std::errc{})
        throw ParseError(ParseError::Kind::syntax, i_, "malformed number");
      tok_.type = Token::Type::number;
      tok_.number = v;
      i_ += static_cast<size_t>(res.ptr - begin);
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      size_t j = i_;
      while (j < text_.size() && std::isalpha(static_cast<unsigned char>(text_[j]))) ++j;
      while (j < text_.size() && std::isdigit(static_cast<unsigned char>(text_[j]))) ++j;
      tok_.type = Token::Type::ident;
      tok_.ident = std::string(text_.substr(i_, j - i_));
      i_ = j;
      return;
    }
    throw ParseError(ParseError::Kind::syntax, i_, std::string("unexpected character '") + c + "'");
  }

  std::string_view text_;
  size_t i_ = 0;
  Token tok_;
};

class Parser {
 public:
  Parser(std::string_view text, int n) : lex_(text), n_(n) {}

  NodePtr parse() {
    NodePtr e = expr();
    const Token& t = lex_.peek();
    if (t.type != Token::Type::end)
      throw ParseError(ParseError::Kind::syntax, t.pos, "unexpected trailing input");
    return e;
  }

 private:
  NodePtr expr() {
    NodePtr lhs = term();
    for (;;) {
      const Token& t = lex_.peek();
      if (t.type == Token::Type::plus) {
        lex_.take();
        lhs = binary_node(SymbolNode::Kind::add, lhs, term());
      } else if (t.type == Token::Type::minus) {
        lex_.take();
        lhs = binary_node(SymbolNode::Kind::sub, lhs, term());
      } else {
        return lhs;
      }
    }
  }

  NodePtr term() {
    NodePtr lhs = unary();
    while (lex_.peek().type == Token::Type::star) {
      lex_.take();
      lhs = binary_node(SymbolNode::Kind::mul, lhs, unary());
    }
    return lhs;
  }

  NodePtr unary() {
    if (lex_.peek().type == Token::Type::minus) {
      lex_.take();
      NodePtr operand = unary();
      // canonical form: a minus applied to a real literal IS a negative literal
      // (exponentiation already bound tighter, so -4^2 reaches here as -(4^2))
      if (operand->kind == SymbolNode::Kind::constant && operand->value.imag() == 0.0)
        return const_node({-operand->value.real(), 0.0});
      return unary_node(SymbolNode::Kind::neg, operand);
    }
    return power();
  }

  NodePtr power() {
    NodePtr base = atom();
    if (lex_.peek().type == Token::Type::caret) {
      lex_.take();
      const Token t = lex_.peek();
      if (t.type != Token::Type::number)
        throw ParseError(ParseError::Kind::syntax, t.pos, "exponent must be a nonnegative integer");
      const double v = t.number;
      if (v < 0 || v != std::floor(v))
        throw ParseError(ParseError::Kind::syntax, t.pos, "exponent must be a nonnegative integer");
      lex_.take();
      return pow_node(base, static_cast<int>(v));
    }
    return base;
  }

  NodePtr atom() {
    const Token t = lex_.take();
    switch (t.type) {
      case Token::Type::number:
        return const_node({t.number, 0.0});
      case Token::Type::lparen: {
        NodePtr e = expr();
        const Token r = lex_.take();
        if (r.type != Token::Type::rparen)
          throw ParseError(ParseError::Kind::syntax, r.pos, "unclosed parenthesis: expected ')'");
        return e;
      }
      case Token::Type::ident:
        return ident_atom(t);
      default:
        throw ParseError(ParseError::Kind::syntax, t.pos, "expected a value");
    }
  }

  NodePtr ident_atom(const Token& t) {
    const std::string& s = t.ident;
    if (s == "i") return const_node({0.0, 1.0});
    if (s == "h0") {
      SymbolNode nd;
      nd.kind = SymbolNode::Kind::h0;
      return make_node(std::move(nd));
    }
    if (s == "exp") {
      const Token l = lex_.take();
      if (l.type != Token::Type::lparen)
        throw ParseError(ParseError::Kind::syntax, l.pos, "exp requires a parenthesized argument");
      NodePtr arg = expr();
      const Token r = lex_.take();
      if (r.type != Token::Type::rparen)
        throw ParseError(ParseError::Kind::syntax, r.pos, "unclosed parenthesis: expected ')'");
      return unary_node(SymbolNode::Kind::exp_fn, arg);
    }
    // variable: letters then digits
    size_t d = 0;
    while (d < s.size() && std::isalpha(static_cast<unsigned char>(s[d]))) ++d;
    const std::string letters = s.substr(0, d);
    const std::string digits = s.substr(d);
    VarKind kind;
    if (letters == "x") {
      kind = VarKind::x;
    } else if (letters == "xi") {
      kind = VarKind::xi;
    } else if (letters == "z") {
      kind = VarKind::z;
    } else if (letters == "zb") {
      kind = VarKind::zbar;
    } else {
      throw ParseError(ParseError::Kind::unknown_variable, t.pos, "unknown variable or function '" + s + "'");
    }
    if (digits.empty())
      throw ParseError(ParseError::Kind::unknown_variable, t.pos, "variable '" + s + "' lacks an index");
    int idx = 0;
    std::from_chars(digits.data(), digits.data() + digits.size(), idx);
    if (idx < 1 || idx > n_)
      throw ParseError(ParseError::Kind::index_out_of_range, t.pos,
                       "variable index " + digits + " out of range for dimension " + std::to_string(n_));
    return var_node(kind, idx);
  }

  Lexer lex_;
  int n_;
};

}  // namespace

SymbolExpr parse_symbol(std::string_view text, int n) {
  if (n < 1) throw std::invalid_argument("parse_symbol: dimension must be >= 1");
  if (text.empty()) throw ParseError(ParseError::Kind::syntax, 0, "empty expression");
  Parser p(text, n);
  NodePtr root = p.parse();
  const SymbolClass cls =
      node_contains_exp(root) ? SymbolClass::poly_bounded : SymbolClass::polynomial;
  return SymbolExpr(std::move(root), n, cls);
}

// ---------------------------------------------------------------------------
// catalog

SymbolExpr catalog_h0(int n) { return SymbolExpr::h0(n); }

SymbolExpr catalog_monomial(const MultiIndex& alpha, const MultiIndex& beta) {
  if (alpha.dim() != beta.dim()) throw std::invalid_argument("catalog_monomial: dimension mismatch");
  const int n = alpha.dim();
  SymbolExpr acc = SymbolExpr::constant({1.0, 0.0}, n);
  bool first = true;
  auto append = [&](const SymbolExpr& factor) {
    acc = first ? factor : acc * factor;
    first = false;
  };
  for (int k = 0; k < n; ++k) {
    const SymbolExpr zk = SymbolExpr::variable(VarKind::z, k + 1, n);
    if (alpha[k] == 1) {
      append(zk);
    } else if (alpha[k] > 1) {
      append(zk.pow(alpha[k]));
    }
  }
  for (int k = 0; k < n; ++k) {
    const SymbolExpr zbk = SymbolExpr::variable(VarKind::zbar, k + 1, n);
    if (beta[k] == 1) {
      append(zbk);
    } else if (beta[k] > 1) {
      append(zbk.pow(beta[k]));
    }
  }
  return acc;
}

SymbolExpr catalog_angular_momentum(int j, int k, int n) {
  if (j < 1 || j > n || k < 1 || k > n || j == k)
    throw std::invalid_argument("catalog_angular_momentum: invalid axes");
  const SymbolExpr xj = SymbolExpr::variable(VarKind::x, j, n);
  const SymbolExpr xk = SymbolExpr::variable(VarKind::x, k, n);
  const SymbolExpr xij = SymbolExpr::variable(VarKind::xi, j, n);
  const SymbolExpr xik = SymbolExpr::variable(VarKind::xi, k, n);
  return xj * xik - xk * xij;
}

RealMatrix symplectic_matrix(int n) {
  RealMatrix J(2 * n);
  for (int k = 0; k < n; ++k) {
    J.at(k, n + k) = 1.0;
    J.at(n + k, k) = -1.0;
  }
  return J;
}

namespace {

RealMatrix matmul(const RealMatrix& A, const RealMatrix& B) {
  RealMatrix C(A.size);
  for (int i = 0; i < A.size; ++i)
    for (int j = 0; j < A.size; ++j) {
      double s = 0;
      for (int k = 0; k < A.size; ++k) s += A.at(i, k) * B.at(k, j);
      C.at(i, j) = s;
    }
  return C;
}

double matrix_scale(const RealMatrix& A) {
  double m = 0;
  for (double v : A.a) m = std::max(m, std::abs(v));
  return m;
}

}  // namespace

SymbolExpr catalog_quadratic(const RealMatrix& A, int n) {
  if (A.size != 2 * n) throw std::invalid_argument("catalog_quadratic: generator must be 2n x 2n");
  const double scale = std::max(1.0, matrix_scale(A));
  // membership in the embedded unitary algebra: A J symmetric and A antisymmetric
  for (int i = 0; i < A.size; ++i)
    for (int j = 0; j < A.size; ++j)
      if (std::abs(A.at(i, j) + A.at(j, i)) > 1e-12 * scale)
        throw std::invalid_argument("catalog_quadratic: generator is not antisymmetric");
  const RealMatrix AJ = matmul(A, symplectic_matrix(n));
  for (int i = 0; i < A.size; ++i)
    for (int j = i + 1; j < A.size; ++j)
      if (std::abs(AJ.at(i, j) - AJ.at(j, i)) > 1e-12 * scale)
        throw std::invalid_argument("catalog_quadratic: A*J is not symmetric (A not in u(n))");

  // p_A(w) = -1/2 w.(AJ).w over stacked coordinates (x1..xn, xi1..xin)
  auto coord = [&](int i) {
    return (i < n) ? SymbolExpr::variable(VarKind::x, i + 1, n)
                   : SymbolExpr::variable(VarKind::xi, i - n + 1, n);
  };
  SymbolExpr acc = SymbolExpr::constant({0.0, 0.0}, n);
  bool first = true;
  for (int i = 0; i < A.size; ++i)
    for (int j = i; j < A.size; ++j) {
      const double c = (i == j) ? -0.5 * AJ.at(i, j) : -AJ.at(i, j);  // symmetric: off-diagonal pairs merge
      if (c == 0.0) continue;
      SymbolExpr t = SymbolExpr::constant({c, 0.0}, n) *
                     ((i == j) ? coord(i).pow(2) : coord(i) * coord(j));
      acc = first ? t : acc + t;
      first = false;
    }
  return first ? SymbolExpr::constant({0.0, 0.0}, n) : acc;
}

std::vector<std::pair<std::string, RealMatrix>> unitary_generator_basis(int n) {
  std::vector<std::pair<std::string, RealMatrix>> basis;
  // per-axis energy: p = (x_j^2 + xi_j^2)/2
  for (int j = 0; j < n; ++j) {
    RealMatrix A(2 * n);
    A.at(j, n + j) = 1.0;
    A.at(n + j, j) = -1.0;
    basis.emplace_back("energy" + std::to_string(j + 1), std::move(A));
  }
  for (int j = 0; j < n; ++j)
    for (int k = j + 1; k < n; ++k) {
      // plane rotation: p = -(x_j xi_k - x_k xi_j)
      RealMatrix R(2 * n);
      R.at(j, k) = 1.0;
      R.at(k, j) = -1.0;
      R.at(n + j, n + k) = 1.0;
      R.at(n + k, n + j) = -1.0;
      basis.emplace_back("rotation" + std::to_string(j + 1) + std::to_string(k + 1), std::move(R));
      // symmetric mixer: p = x_j x_k + xi_j xi_k up to sign
      RealMatrix S(2 * n);
      S.at(j, n + k) = 1.0;
      S.at(k, n + j) = 1.0;
      S.at(n + k, j) = -1.0;
      S.at(n + j, k) = -1.0;
      basis.emplace_back("mixer" + std::to_string(j + 1) + std::to_string(k + 1), std::move(S));
    }
  return basis;
}

SymbolExpr catalog_lookup(const std::string& name, int n) {
  auto parse_index_list = [](const std::string& text, int dim) {
    MultiIndex mi;
    mi.components.assign(static_cast<size_t>(dim), 0);
    std::stringstream ss(text);
    std::string part;
    size_t k = 0;
    while (std::getline(ss, part, ',')) {
      if (k >= mi.components.size()) throw std::invalid_argument("catalog: too many index components");
      mi.components[k++] = std::stoi(part);
    }
    if (k != mi.components.size()) throw std::invalid_argument("catalog: too few index components");
    return mi;
  };

  if (name == "h0") return catalog_h0(n);
  const size_t colon = name.find(':');
  const std::string head = name.substr(0, colon == std::string::npos ? name.size() : colon);
  const std::string args = colon == std::string::npos ? "" : name.substr(colon + 1);
  if (head == "monomial") {
    const size_t semi = args.find(';');
    if (semi == std::string::npos)
      throw std::invalid_argument("catalog: monomial needs 'a1,..;b1,..'");
    return catalog_monomial(parse_index_list(args.substr(0, semi), n),
                            parse_index_list(args.substr(semi + 1), n));
  }
  if (head == "angular") {
    const size_t comma = args.find(',');
    if (comma == std::string::npos) throw std::invalid_argument("catalog: angular needs 'j,k'");
    return catalog_angular_momentum(std::stoi(args.substr(0, comma)), std::stoi(args.substr(comma + 1)), n);
  }
  if (head == "ugen") {
    auto basis = unitary_generator_basis(n);
    const size_t idx = static_cast<size_t>(std::stoi(args));
    if (idx >= basis.size()) throw std::invalid_argument("catalog: ugen index out of range");
    return catalog_quadratic(basis[idx].second, n);
  }
  throw std::invalid_argument("catalog: unknown name '" + name + "'");
}

// ---------------------------------------------------------------------------
// flow, invariance, averaging

PhasePoint classical_flow(double t, const PhasePoint& w) {
  const double c = std::cos(t), s = std::sin(t);
  PhasePoint out = w;
  for (int k = 0; k < w.dim(); ++k) {
    const size_t i = static_cast<size_t>(k);
    out.x[i] = c * w.x[i] + s * w.xi[i];
    out.xi[i] = -s * w.x[i] + c * w.xi[i];
  }
  return out;
}

std::vector<FlowSample> make_flow_samples(int n, int count, unsigned seed) {
  std::mt19937 gen(seed);
  std::uniform_real_distribution<double> coord(-2.0, 2.0);
  std::uniform_real_distribution<double> time(0.0, kTwoPi);
  std::vector<FlowSample> samples;
  samples.reserve(static_cast<size_t>(count));
  for (int i = 0; i < count; ++i) {
    FlowSample s;
    s.w.x.resize(static_cast<size_t>(n));
    s.w.xi.resize(static_cast<size_t>(n));
    for (double& v : s.w.x) v = coord(gen);
    for (double& v : s.w.xi) v = coord(gen);
    s.t = time(gen);
    samples.push_back(std::move(s));
  }
  return samples;
}

InvarianceReport flow_invariance_check(const std::function<std::complex<double>(const PhasePoint&)>& f,
                                       const std::vector<FlowSample>& samples, double tol) {
  double max_dev = 0;
  for (const FlowSample& s : samples)
    max_dev = std::max(max_dev, std::abs(f(classical_flow(s.t, s.w)) - f(s.w)));
  return InvarianceReport{max_dev <= tol, max_dev};
}

AveragedSymbol::AveragedSymbol(SymbolExpr base, int t_nodes) : base_(std::move(base)), t_nodes_(t_nodes) {
  if (t_nodes_ < 1) throw std::invalid_argument("AveragedSymbol: need at least one node");
}

std::complex<double> AveragedSymbol::eval(const PhasePoint& w) const {
  std::complex<double> acc{0.0, 0.0};
  for (int j = 0; j < t_nodes_; ++j) acc += base_.eval(classical_flow(kTwoPi * j / t_nodes_, w));
  return acc / static_cast<double>(t_nodes_);
}

AveragedSymbol classical_average(const SymbolExpr& f, int t_nodes) {
  if (t_nodes == 0) {
    const int deg = f.poly_degree();
    t_nodes = (deg >= 0) ? 2 * deg + 1 : 64;
  }
  return AveragedSymbol(f, t_nodes);
}

}  // namespace hocm
