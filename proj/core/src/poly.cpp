#include "wschub/poly.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <queue>
#include <sstream>
#include <tuple>
#include <unordered_map>

#include "wschub/error.hpp"

namespace wschub {

std::string rational_to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Rational parse_rational(const std::string& text) {
  auto valid_int = [](const std::string& s) {
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i == s.size()) return false;
    return std::all_of(s.begin() + static_cast<std::ptrdiff_t>(i), s.end(),
                       [](char c) { return c >= '0' && c <= '9'; });
  };
  const auto slash = text.find('/');
  const std::string num = text.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den)) throw DomainError("malformed rational '" + text + "'");
  const std::string num_clean = num[0] == '+' ? num.substr(1) : num;
  const std::string den_clean = den[0] == '+' ? den.substr(1) : den;
  Rational q{mpz_class(num_clean), mpz_class(den_clean)};
  if (q.get_den() == 0) throw DomainError("zero denominator in '" + text + "'");
  q.canonicalize();
  return q;
}

// ---------------------------------------------------------------------------
// Contexts

std::shared_ptr<const VariableContext> VariableContext::make(std::vector<std::string> names) {
  if (names.empty()) throw DomainError("variable context must be non-empty");
  if (names.size() > static_cast<std::size_t>(kMaxVariables)) {
    throw DomainError("at most " + std::to_string(kMaxVariables) + " variables are supported");
  }
  std::vector<std::string> sorted = names;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw DomainError("variable names must be distinct");
  }
  return std::shared_ptr<const VariableContext>(new VariableContext(std::move(names)));
}

std::optional<std::size_t> VariableContext::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
  }
  return std::nullopt;
}

namespace {

std::vector<std::string> numbered(const std::string& prefix, int n) {
  std::vector<std::string> out;
  for (int i = 1; i <= n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

// Standard contexts are interned so that operands usually share a pointer.
ContextPtr interned(const std::string& prefix, int n, bool with_z) {
  static std::mutex mu;
  static std::map<std::tuple<std::string, int, bool>, ContextPtr> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[{prefix, n, with_z}];
  if (!slot) {
    auto names = numbered(prefix, n);
    if (with_z) names.push_back("z");
    slot = VariableContext::make(std::move(names));
  }
  return slot;
}

}  // namespace

ContextPtr ordinary_context(int n) { return interned("y", n, false); }

ContextPtr cone_context(int n) { return interned("y", n, true); }

ContextPtr weighted_context(int n) { return interned("Yw", n, false); }

bool same_context(const ContextPtr& a, const ContextPtr& b) {
  return a == b || (a && b && *a == *b);
}

namespace {

void require_same(const ContextPtr& a, const ContextPtr& b) {
  if (!same_context(a, b)) throw ContextMismatch("polynomials live in different variable contexts");
}

}  // namespace

// ---------------------------------------------------------------------------
// Monomials

void Monomial::set_exponent(std::size_t var, int e) {
  if (var >= static_cast<std::size_t>(kMaxVariables) || e < 0 || e > 255) {
    throw DomainError("exponent out of range");
  }
  std::uint64_t& word = var < 8 ? hi_ : lo_;
  const unsigned s = shift(var);
  word = (word & ~(std::uint64_t{0xff} << s)) | (static_cast<std::uint64_t>(e) << s);
}

Monomial Monomial::operator*(const Monomial& o) const {
  // Byte-wise add; a carry out of any byte means some exponent exceeded 255.
  constexpr std::uint64_t kHigh = 0x8080808080808080ull;
  auto add = [](std::uint64_t a, std::uint64_t b) {
    const std::uint64_t low7 = (a & ~kHigh) + (b & ~kHigh);
    const std::uint64_t sum = low7 ^ ((a ^ b) & kHigh);
    const std::uint64_t carry = (a & b) | ((a | b) & ~sum);
    if (carry & kHigh) throw DomainError("monomial exponent overflow");
    return sum;
  };
  Monomial r;
  r.hi_ = add(hi_, o.hi_);
  r.lo_ = add(lo_, o.lo_);
  return r;
}

// ---------------------------------------------------------------------------
// Polynomials

namespace {

bool term_before(const Term& a, const Term& b) { return a.mono > b.mono; }

/// Numerators over the lcm of the denominators: p = Σ nums[i]·m_i / den.
struct Cleared {
  std::vector<mpz_class> nums;
  mpz_class den = 1;
};

Cleared clear_denominators(const std::vector<Term>& terms) {
  Cleared out;
  for (const Term& t : terms) mpz_lcm(out.den.get_mpz_t(), out.den.get_mpz_t(), t.coeff.get_den_mpz_t());
  out.nums.resize(terms.size());
  for (std::size_t i = 0; i < terms.size(); ++i) {
    mpz_divexact(out.nums[i].get_mpz_t(), out.den.get_mpz_t(), terms[i].coeff.get_den_mpz_t());
    out.nums[i] *= terms[i].coeff.get_num();
  }
  return out;
}

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

}  // namespace

Polynomial Polynomial::constant(ContextPtr ctx, const Rational& c) {
  Polynomial p(std::move(ctx));
  if (c != 0) p.terms_.push_back({Monomial{}, c});
  return p;
}

Polynomial Polynomial::variable(ContextPtr ctx, std::size_t var) {
  if (var >= ctx->size()) throw DomainError("variable index out of range");
  Polynomial p(std::move(ctx));
  Monomial m;
  m.set_exponent(var, 1);
  p.terms_.push_back({m, Rational(1)});
  return p;
}

Polynomial Polynomial::variable(ContextPtr ctx, const std::string& name) {
  auto idx = ctx->index_of(name);
  if (!idx) throw DomainError("unknown variable '" + name + "'");
  return variable(std::move(ctx), *idx);
}

Polynomial Polynomial::from_terms(ContextPtr ctx, std::vector<Term> terms) {
  Polynomial p(std::move(ctx));
  const std::size_t arity = p.ctx_->size();
  for (Term& t : terms) {
    for (std::size_t v = arity; v < static_cast<std::size_t>(kMaxVariables); ++v) {
      if (t.mono.exponent(v) != 0) throw DomainError("monomial uses a variable outside the context");
    }
    if (t.coeff.get_den() == 0) throw DomainError("zero denominator in coefficient");
    t.coeff.canonicalize();
  }
  std::sort(terms.begin(), terms.end(), term_before);
  for (Term& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff += t.coeff;
    } else {
      if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
  return p;
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  const int deg = terms_.front().mono.degree();
  return terms_.back().mono.degree() == deg;
}

Rational Polynomial::constant_term() const {
  if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coeff;
  return Rational(0);
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& key) { return t.mono > key; });
  if (it != terms_.end() && it->mono == m) return it->coeff;
  return Rational(0);
}

int Polynomial::degree_in(std::size_t var) const {
  int best = 0;
  for (const Term& t : terms_) best = std::max(best, t.mono.exponent(var));
  return best;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (Term& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

void Polynomial::add_scaled(const Polynomial& o, int sign) {
  require_same(ctx_, o.ctx_);
  if (o.terms_.empty()) return;
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && a->mono > b->mono)) {
      out.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->mono > a->mono) {
      out.push_back({b->mono, sign > 0 ? b->coeff : Rational(-b->coeff)});
      ++b;
    } else {
      Rational c = sign > 0 ? Rational(a->coeff + b->coeff) : Rational(a->coeff - b->coeff);
      if (c != 0) out.push_back({a->mono, std::move(c)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  add_scaled(o, +1);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  add_scaled(o, -1);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (Term& t : terms_) t.coeff *= c;
  }
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same(a.ctx_, b.ctx_);
  Polynomial r(a.ctx_);
  if (a.is_zero() || b.is_zero()) return r;
  // Each row (one term of the short factor times the long factor) is already
  // sorted because graded-lex is a monomial order; merge the rows with a heap.
  const Polynomial& s = a.terms_.size() <= b.terms_.size() ? a : b;
  const Polynomial& l = a.terms_.size() <= b.terms_.size() ? b : a;
  if (s.terms_.size() == 1) {
    const Term& t = s.terms_.front();
    r.terms_.reserve(l.terms_.size());
    for (const Term& u : l.terms_) r.terms_.push_back({t.mono * u.mono, t.coeff * u.coeff});
    return r;
  }
  // Accumulate integer numerators; one normalization per output term.
  const Cleared cs = clear_denominators(s.terms_);
  const Cleared cl = clear_denominators(l.terms_);
  std::unordered_map<Monomial, std::size_t, MonomialHash> slot;
  slot.reserve(s.terms_.size() * l.terms_.size());
  std::vector<Monomial> monos;
  std::vector<mpz_class> acc;
  for (std::size_t i = 0; i < s.terms_.size(); ++i) {
    for (std::size_t j = 0; j < l.terms_.size(); ++j) {
      const Monomial m = s.terms_[i].mono * l.terms_[j].mono;
      auto [it, fresh] = slot.try_emplace(m, monos.size());
      if (fresh) {
        monos.push_back(m);
        acc.emplace_back();
      }
      mpz_addmul(acc[it->second].get_mpz_t(), cs.nums[i].get_mpz_t(), cl.nums[j].get_mpz_t());
    }
  }
  const mpz_class den = cs.den * cl.den;
  r.terms_.reserve(monos.size());
  for (std::size_t k = 0; k < monos.size(); ++k) {
    if (acc[k] == 0) continue;
    Rational c(acc[k], den);
    c.canonicalize();
    r.terms_.emplace_back(monos[k], std::move(c));
  }
  std::sort(r.terms_.begin(), r.terms_.end(), term_before);
  return r;
}

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial result = constant(ctx_, 1);
  Polynomial base = *this;
  while (k) {
    if (k & 1u) result = result * base;
    k >>= 1u;
    if (k) base = base * base;
  }
  return result;
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
  if (point.size() != ctx_->size()) throw DomainError("evaluation point has wrong arity");
  Rational total = 0;
  for (const Term& t : terms_) {
    Rational v = t.coeff;
    for (std::size_t i = 0; i < point.size(); ++i) {
      for (int e = t.mono.exponent(i); e > 0; --e) v *= point[i];
    }
    total += v;
  }
  return total;
}

Polynomial Polynomial::renamed(ContextPtr ctx) const {
  if (ctx->size() != ctx_->size()) throw ContextMismatch("renaming requires equal arity");
  Polynomial r(std::move(ctx));
  r.terms_ = terms_;
  return r;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (!same_context(a.ctx_, b.ctx_)) return false;
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].mono != b.terms_[i].mono || a.terms_[i].coeff != b.terms_[i].coeff) return false;
  }
  return true;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const Term& t : terms_) {
    Rational c = t.coeff;
    if (first) {
      if (c < 0) {
        out << "-";
        c = -c;
      }
    } else {
      out << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    first = false;
    const bool unit = c == 1;
    if (t.mono.is_one()) {
      out << c.get_str();
      continue;
    }
    if (!unit) out << c.get_str() << "*";
    bool first_var = true;
    for (std::size_t v = 0; v < ctx_->size(); ++v) {
      const int e = t.mono.exponent(v);
      if (e == 0) continue;
      if (!first_var) out << "*";
      first_var = false;
      out << ctx_->name(v);
      if (e > 1) out << "^" << e;
    }
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Linear forms

LinearForm::LinearForm(ContextPtr ctx, std::vector<Rational> coefficients)
    : ctx_(std::move(ctx)), coeffs_(std::move(coefficients)) {
  if (coeffs_.size() != ctx_->size()) throw DomainError("linear form arity mismatch");
  for (Rational& c : coeffs_) {
    if (c.get_den() == 0) throw DomainError("zero denominator in coefficient");
    c.canonicalize();
  }
  if (std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; })) {
    throw DomainError("linear form must be nonzero");
  }
}

LinearForm LinearForm::from_polynomial(const Polynomial& p) {
  std::vector<Rational> coeffs(p.context()->size(), Rational(0));
  for (const Term& t : p.terms()) {
    if (t.mono.degree() != 1) throw DomainError("not a homogeneous linear polynomial: " + p.to_string());
    for (std::size_t v = 0; v < coeffs.size(); ++v) {
      if (t.mono.exponent(v) == 1) coeffs[v] = t.coeff;
    }
  }
  return LinearForm(p.context(), std::move(coeffs));
}

Polynomial LinearForm::to_polynomial() const {
  std::vector<Term> terms;
  for (std::size_t v = 0; v < coeffs_.size(); ++v) {
    if (coeffs_[v] == 0) continue;
    Monomial m;
    m.set_exponent(v, 1);
    terms.push_back({m, coeffs_[v]});
  }
  return Polynomial::from_terms(ctx_, std::move(terms));
}

// ---------------------------------------------------------------------------
// Division by a linear form

std::optional<Polynomial> exact_divide(const Polynomial& p, const LinearForm& form) {
  require_same(p.context(), form.context());
  if (p.is_zero()) return Polynomial::zero(p.context());
  // Work with p = P/D and form = s·F, F primitive in Z[x]. By Gauss's lemma
  // P/F is integral when it exists, so every quotient step must divide in Z.
  // If F divides P, the leading term of what is left is always the leading
  // term of F times the next quotient term (heap division).
  struct FormTerm {
    Monomial mono;
    mpz_class coeff;
  };
  mpz_class f_den = 1;
  for (const Rational& c : form.coefficients()) mpz_lcm(f_den.get_mpz_t(), f_den.get_mpz_t(), c.get_den_mpz_t());
  mpz_class f_content = 0;
  std::vector<FormTerm> f;
  std::size_t lead = 0;
  for (std::size_t v = 0; v < form.coefficients().size(); ++v) {
    if (form[v] == 0) continue;
    Monomial m;
    m.set_exponent(v, 1);
    mpz_class c = form[v].get_num() * (f_den / form[v].get_den());
    if (f.empty()) lead = v;
    mpz_gcd(f_content.get_mpz_t(), f_content.get_mpz_t(), c.get_mpz_t());
    f.push_back({m, std::move(c)});
  }
  for (FormTerm& t : f) mpz_divexact(t.coeff.get_mpz_t(), t.coeff.get_mpz_t(), f_content.get_mpz_t());
  const Rational scale(f_content, f_den);  // form = scale·F

  const Cleared cp = clear_denominators(p.terms());

  struct Cursor {
    Monomial mono;
    std::size_t q;
    std::size_t f;
  };
  auto cmp = [](const Cursor& x, const Cursor& y) { return x.mono < y.mono; };
  std::priority_queue<Cursor, std::vector<Cursor>, decltype(cmp)> heap(cmp);

  const auto& pt = p.terms();
  std::vector<Monomial> q_mono;
  std::vector<mpz_class> q_coeff;
  q_mono.reserve(pt.size());
  q_coeff.reserve(pt.size());
  std::size_t next = 0;
  mpz_class c;
  while (next < pt.size() || !heap.empty()) {
    Monomial m;
    if (next < pt.size() && (heap.empty() || !(pt[next].mono < heap.top().mono))) {
      m = pt[next].mono;
    } else {
      m = heap.top().mono;
    }
    c = 0;
    if (next < pt.size() && pt[next].mono == m) c = cp.nums[next++];
    while (!heap.empty() && heap.top().mono == m) {
      const Cursor cur = heap.top();
      heap.pop();
      mpz_submul(c.get_mpz_t(), q_coeff[cur.q].get_mpz_t(), f[cur.f].coeff.get_mpz_t());
      if (cur.f + 1 < f.size()) heap.push({q_mono[cur.q] * f[cur.f + 1].mono, cur.q, cur.f + 1});
    }
    if (c == 0) continue;
    const int e = m.exponent(lead);
    if (e == 0 || !mpz_divisible_p(c.get_mpz_t(), f.front().coeff.get_mpz_t())) return std::nullopt;
    m.set_exponent(lead, e - 1);
    q_mono.push_back(m);
    q_coeff.emplace_back();
    mpz_divexact(q_coeff.back().get_mpz_t(), c.get_mpz_t(), f.front().coeff.get_mpz_t());
    if (f.size() > 1) heap.push({m * f[1].mono, q_mono.size() - 1, 1});
  }
  // p/form = (P/F) / (D·scale)
  const Rational back = 1 / (Rational(cp.den) * scale);
  std::vector<Term> q;
  q.reserve(q_mono.size());
  for (std::size_t k = 0; k < q_mono.size(); ++k) q.emplace_back(q_mono[k], Rational(q_coeff[k]) * back);
  return Polynomial::from_terms(p.context(), std::move(q));
}

// ---------------------------------------------------------------------------
// Substitution

namespace {

/// Horner evaluation over the source variables, one variable per level.
Polynomial substitute_rec(std::vector<Term> terms, std::size_t var, std::span<const Polynomial> images,
                          const ContextPtr& target) {
  if (terms.empty()) return Polynomial::zero(target);
  if (var == images.size()) {
    Rational c = 0;
    for (const Term& t : terms) c += t.coeff;
    return Polynomial::constant(target, c);
  }
  int top = 0;
  for (const Term& t : terms) top = std::max(top, t.mono.exponent(var));
  std::vector<std::vector<Term>> buckets(static_cast<std::size_t>(top + 1));
  for (Term& t : terms) {
    const int e = t.mono.exponent(var);
    t.mono.set_exponent(var, 0);
    buckets[static_cast<std::size_t>(e)].push_back(std::move(t));
  }
  Polynomial acc = Polynomial::zero(target);
  for (int e = top; e >= 0; --e) {
    if (e != top) acc = acc * images[var];
    acc += substitute_rec(std::move(buckets[static_cast<std::size_t>(e)]), var + 1, images, target);
  }
  return acc;
}

}  // namespace

Polynomial substitute(const Polynomial& p, std::span<const Polynomial> images, const ContextPtr& target) {
  if (images.size() != p.context()->size()) {
    throw DomainError("substitution must map every variable of the source context");
  }
  for (const Polynomial& img : images) require_same(img.context(), target);
  return substitute_rec(p.terms(), 0, images, target);
}

LinearSubstitution LinearSubstitution::identity(ContextPtr ctx) {
  LinearSubstitution s{ctx, ctx, {}};
  for (std::size_t i = 0; i < ctx->size(); ++i) {
    std::vector<Rational> row(ctx->size(), Rational(0));
    row[i] = 1;
    s.matrix.push_back(std::move(row));
  }
  return s;
}

std::vector<Polynomial> LinearSubstitution::images() const {
  if (matrix.size() != source->size()) throw DomainError("substitution must map every source variable");
  std::vector<Polynomial> out;
  out.reserve(matrix.size());
  for (const auto& row : matrix) {
    if (row.size() != target->size()) throw DomainError("substitution row has wrong arity");
    std::vector<Term> terms;
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (row[j] == 0) continue;
      Monomial m;
      m.set_exponent(j, 1);
      terms.push_back({m, row[j]});
    }
    out.push_back(Polynomial::from_terms(target, std::move(terms)));
  }
  return out;
}

Polynomial substitute_linear(const Polynomial& p, const LinearSubstitution& map) {
  require_same(p.context(), map.source);
  const auto images = map.images();
  return substitute(p, images, map.target);
}

// ---------------------------------------------------------------------------
// Linear algebra over Q

std::optional<std::vector<std::vector<Rational>>> invert_matrix(std::vector<std::vector<Rational>> m) {
  const std::size_t n = m.size();
  std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) throw DomainError("matrix must be square");
    inv[i][i] = 1;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(m[piv], m[col]);
    std::swap(inv[piv], inv[col]);
    const Rational scale = 1 / m[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      m[col][j] *= scale;
      inv[col][j] *= scale;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col] == 0) continue;
      const Rational f = m[r][col];
      for (std::size_t j = 0; j < n; ++j) {
        m[r][j] -= f * m[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

namespace {

/// Reduced row echelon form; returns the pivot column of each nonzero row.
std::vector<std::size_t> row_reduce(std::vector<std::vector<Rational>>& rows, bool pivot_last) {
  std::vector<std::size_t> pivots;
  if (rows.empty()) return pivots;
  const std::size_t cols = rows[0].size();
  std::size_t r = 0;
  for (std::size_t step = 0; step < cols && r < rows.size(); ++step) {
    const std::size_t col = pivot_last ? cols - 1 - step : step;
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][col] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[r]);
    const Rational scale = 1 / rows[r][col];
    for (auto& x : rows[r]) x *= scale;
    for (std::size_t o = 0; o < rows.size(); ++o) {
      if (o == r || rows[o][col] == 0) continue;
      const Rational f = rows[o][col];
      for (std::size_t j = 0; j < cols; ++j) rows[o][j] -= f * rows[r][j];
    }
    pivots.push_back(col);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

}  // namespace

std::size_t linear_rank(std::span<const LinearForm> forms) {
  std::vector<std::vector<Rational>> rows;
  for (const auto& f : forms) {
    if (!rows.empty() && f.coefficients().size() != rows[0].size()) {
      throw ContextMismatch("forms of different arity");
    }
    rows.push_back(f.coefficients());
  }
  return row_reduce(rows, false).size();
}

Polynomial reduce_modulo(const Polynomial& p, std::span<const LinearForm> forms) {
  std::vector<std::vector<Rational>> rows;
  for (const auto& f : forms) {
    require_same(f.context(), p.context());
    rows.push_back(f.coefficients());
  }
  const auto pivots = row_reduce(rows, true);
  const ContextPtr& ctx = p.context();
  std::vector<Polynomial> images;
  for (std::size_t v = 0; v < ctx->size(); ++v) images.push_back(Polynomial::variable(ctx, v));
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    // x_pivot = -Σ_{j != pivot} row[j] x_j
    Polynomial img = Polynomial::zero(ctx);
    for (std::size_t j = 0; j < ctx->size(); ++j) {
      if (j == pivots[r] || rows[r][j] == 0) continue;
      img -= Polynomial::variable(ctx, j) * rows[r][j];
    }
    images[pivots[r]] = std::move(img);
  }
  return substitute(p, images, ctx);
}

std::optional<Polynomial> expand_in_forms(const Polynomial& p, std::span<const NamedForm> forms,
                                          std::span<const NamedForm> complement) {
  const ContextPtr& src = p.context();
  const std::size_t n = src->size();
  if (forms.size() + complement.size() != n) {
    throw DomainError("forms and complement must have as many members as the context has variables");
  }
  std::vector<std::string> names;
  std::vector<std::vector<Rational>> matrix;
  for (auto group : {forms, complement}) {
    for (const NamedForm& f : group) {
      require_same(f.form.context(), src);
      names.push_back(f.name);
      matrix.push_back(f.form.coefficients());
    }
  }
  auto inv = invert_matrix(matrix);
  if (!inv) throw DomainError("forms and complement are not a basis of the degree-one forms");
  const ContextPtr full = VariableContext::make(names);
  // t = M x, so x_j = Σ_i inv[j][i] t_i.
  LinearSubstitution back{src, full, *inv};
  const Polynomial rewritten = substitute_linear(p, back);

  std::vector<std::string> form_names(names.begin(), names.begin() + static_cast<std::ptrdiff_t>(forms.size()));
  if (form_names.empty()) {
    // Only constants can live in the subring generated by nothing.
    if (!rewritten.is_constant()) return std::nullopt;
    form_names.push_back("_");
  }
  const ContextPtr reduced = VariableContext::make(form_names);
  std::vector<Term> terms;
  for (const Term& t : rewritten.terms()) {
    for (std::size_t v = forms.size(); v < n; ++v) {
      if (t.mono.exponent(v) != 0) return std::nullopt;
    }
    terms.push_back(t);
  }
  return Polynomial::from_terms(reduced, std::move(terms));
}

}  // namespace wschub
