#include "christol/algebraic_series.hpp"

#include <algorithm>
#include <limits>

#include "christol/errors.hpp"

namespace christol {

// ---------------------------------------------------------------------------
// BivariatePolynomial

BivariatePolynomial::BivariatePolynomial(Prime p, std::vector<std::vector<Residue>> by_y_power)
    : p_(p) {
  int top_y = -1;
  int top_x = -1;
  for (std::size_t j = 0; j < by_y_power.size(); ++j) {
    for (std::size_t i = 0; i < by_y_power[j].size(); ++i) {
      if (by_y_power[j][i] % p.value() != 0) {
        top_y = std::max(top_y, static_cast<int>(j));
        top_x = std::max(top_x, static_cast<int>(i));
      }
    }
  }
  if (top_y < 1) throw DegeneratePolynomial("polynomial does not involve y");
  dx_ = static_cast<unsigned>(top_x);
  dy_ = static_cast<unsigned>(top_y);
  table_.assign(static_cast<std::size_t>(dx_ + 1) * (dy_ + 1), 0);
  for (unsigned j = 0; j <= dy_; ++j) {
    for (unsigned i = 0; i <= dx_ && i < by_y_power[j].size(); ++i) {
      table_[j * (dx_ + 1) + i] = by_y_power[j][i] % p.value();
    }
  }
}

Residue BivariatePolynomial::coeff(unsigned i, unsigned j) const {
  if (i > dx_ || j > dy_) return 0;
  return table_[j * (dx_ + 1) + i];
}

std::span<const Residue> BivariatePolynomial::y_coefficient(unsigned j) const {
  if (j > dy_) throw DimensionMismatch(dy_, j);
  return {table_.data() + static_cast<std::size_t>(j) * (dx_ + 1), dx_ + 1u};
}

namespace {

// Polynomial in x as a series at precision n.
TruncatedSeries x_poly(Prime p, std::span<const Residue> c, std::size_t n) {
  std::vector<Residue> v(n, 0);
  for (std::size_t i = 0; i < std::min(n, c.size()); ++i) v[i] = c[i];
  return {p, std::move(v)};
}

}  // namespace

TruncatedSeries BivariatePolynomial::evaluate(const TruncatedSeries& f) const {
  if (f.prime() != p_) throw ModulusMismatch(p_.value(), f.prime().value());
  const std::size_t n = f.precision();
  auto acc = x_poly(p_, y_coefficient(dy_), n);
  for (unsigned j = dy_; j-- > 0;) acc = add(multiply(acc, f), x_poly(p_, y_coefficient(j), n));
  return acc;
}

TruncatedSeries BivariatePolynomial::evaluate_dy(const TruncatedSeries& f) const {
  if (f.prime() != p_) throw ModulusMismatch(p_.value(), f.prime().value());
  const std::size_t n = f.precision();
  auto scaled = [&](unsigned j) {
    return scale(x_poly(p_, y_coefficient(j), n), FpElement(j, p_));
  };
  auto acc = scaled(dy_);
  for (unsigned j = dy_; j-- > 1;) acc = add(multiply(acc, f), scaled(j));
  return acc;
}

std::string BivariatePolynomial::to_string() const {
  std::string out;
  for (unsigned j = 0; j <= dy_; ++j) {
    for (unsigned i = 0; i <= dx_; ++i) {
      const Residue c = coeff(i, j);
      if (c == 0) continue;
      std::string mono;
      auto append = [&mono](const std::string& factor) {
        if (!mono.empty()) mono += '*';
        mono += factor;
      };
      if (c != 1 || (i == 0 && j == 0)) append(std::to_string(c));
      if (i == 1) append("x");
      if (i > 1) append("x^" + std::to_string(i));
      if (j == 1) append("y");
      if (j > 1) append("y^" + std::to_string(j));
      if (!out.empty()) out += " + ";
      out += mono;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Parser

namespace {

// Dense intermediate used while parsing; may be free of y.
struct Dense {
  unsigned dx = 0;
  unsigned dy = 0;
  std::vector<Residue> c;  // (dy+1) x (dx+1), row j holds the x-coefficients of y^j

  static Dense constant(Residue v) { return {0, 0, {v}}; }
  Residue at(unsigned i, unsigned j) const { return c[j * (dx + 1) + i]; }
  Residue& at(unsigned i, unsigned j) { return c[j * (dx + 1) + i]; }
};

class Parser {
 public:
  Parser(std::string_view text, Prime p, ParseLimits limits)
      : text_(text), p_(p), limits_(limits) {}

  Dense parse() {
    Dense result = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return result;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw SyntaxError(pos_, what); }

  void skip_space() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' ||
                                   text_[pos_] == '\n' || text_[pos_] == '\r')) {
      ++pos_;
    }
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Dense expr() {
    Dense acc = term();
    while (true) {
      if (accept('+')) {
        acc = combine(acc, term(), false);
      } else if (accept('-')) {
        acc = combine(acc, term(), true);
      } else {
        return acc;
      }
    }
  }

  Dense term() {
    Dense acc = factor();
    while (accept('*')) acc = product(acc, factor());
    return acc;
  }

  Dense factor() {
    Dense base = atom();
    if (!accept('^')) return base;
    skip_space();
    const std::uint64_t e = uint_literal(false);
    return power(base, e);
  }

  Dense atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == 'x' || c == 'y') {
      ++pos_;
      Dense d;
      d.dx = c == 'x' ? 1 : 0;
      d.dy = c == 'y' ? 1 : 0;
      d.c.assign((d.dx + 1) * (d.dy + 1), 0);
      d.at(d.dx, d.dy) = 1;
      return d;
    }
    if (c == '(') {
      ++pos_;
      Dense inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (c >= '0' && c <= '9') return Dense::constant(static_cast<Residue>(uint_literal(true)));
    fail("expected a number, 'x', 'y' or '('");
  }

  // Reads a run of decimal digits. Coefficients are reduced mod p; exponents
  // saturate so that overflow is reported as DegreeOverflow, not wraparound.
  std::uint64_t uint_literal(bool reduce) {
    if (pos_ >= text_.size() || text_[pos_] < '0' || text_[pos_] > '9') fail("expected an unsigned integer");
    constexpr std::uint64_t kSaturate = std::numeric_limits<std::uint32_t>::max();
    std::uint64_t v = 0;
    while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') {
      v = v * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
      v = reduce ? v % p_.value() : std::min(v, kSaturate);
      ++pos_;
    }
    return v;
  }

  void check_degree(std::uint64_t dx, std::uint64_t dy) const {
    if (dx > limits_.max_deg_x || dy > limits_.max_deg_y) {
      throw DegreeOverflow("degree (" + std::to_string(dx) + ", " + std::to_string(dy) +
                           ") exceeds limit (" + std::to_string(limits_.max_deg_x) + ", " +
                           std::to_string(limits_.max_deg_y) + ")");
    }
  }

  Dense combine(const Dense& a, const Dense& b, bool subtract) const {
    Dense r;
    r.dx = std::max(a.dx, b.dx);
    r.dy = std::max(a.dy, b.dy);
    r.c.assign((r.dx + 1) * (r.dy + 1), 0);
    for (unsigned j = 0; j <= a.dy; ++j)
      for (unsigned i = 0; i <= a.dx; ++i) r.at(i, j) = a.at(i, j);
    for (unsigned j = 0; j <= b.dy; ++j)
      for (unsigned i = 0; i <= b.dx; ++i)
        r.at(i, j) = subtract ? p_.sub(r.at(i, j), b.at(i, j)) : p_.add(r.at(i, j), b.at(i, j));
    return r;
  }

  Dense product(const Dense& a, const Dense& b) const {
    check_degree(std::uint64_t{a.dx} + b.dx, std::uint64_t{a.dy} + b.dy);
    Dense r;
    r.dx = a.dx + b.dx;
    r.dy = a.dy + b.dy;
    r.c.assign((r.dx + 1) * (r.dy + 1), 0);
    for (unsigned ja = 0; ja <= a.dy; ++ja)
      for (unsigned ia = 0; ia <= a.dx; ++ia) {
        const Residue ca = a.at(ia, ja);
        if (ca == 0) continue;
        for (unsigned jb = 0; jb <= b.dy; ++jb)
          for (unsigned ib = 0; ib <= b.dx; ++ib) {
            Residue& dst = r.at(ia + ib, ja + jb);
            dst = p_.add(dst, p_.mul(ca, b.at(ib, jb)));
          }
      }
    return r;
  }

  Dense power(Dense base, std::uint64_t e) const {
    check_degree(base.dx * e, base.dy * e);
    Dense result = Dense::constant(1);
    while (e > 0) {
      if (e & 1) result = product(result, base);
      e >>= 1;
      if (e > 0) base = product(base, base);
    }
    return result;
  }

  std::string_view text_;
  Prime p_;
  ParseLimits limits_;
  std::size_t pos_ = 0;
};

}  // namespace

BivariatePolynomial parse_bivariate(std::string_view text, Prime p, ParseLimits limits) {
  const Dense d = Parser(text, p, limits).parse();
  std::vector<std::vector<Residue>> rows(d.dy + 1);
  for (unsigned j = 0; j <= d.dy; ++j) rows[j].assign(d.c.begin() + j * (d.dx + 1), d.c.begin() + (j + 1) * (d.dx + 1));
  return {p, std::move(rows)};
}

// ---------------------------------------------------------------------------
// Branch expansion

namespace {

// Q(0, c) for a candidate constant term.
Residue value_at_origin(const BivariatePolynomial& q, Residue c) {
  const Prime p = q.prime();
  Residue acc = 0;
  for (unsigned j = q.deg_y() + 1; j-- > 0;) acc = p.add(p.mul(acc, c), q.coeff(0, j));
  return acc;
}

// dQ/dy (0, c).
Residue slope_at_origin(const BivariatePolynomial& q, Residue c) {
  const Prime p = q.prime();
  Residue acc = 0;
  for (unsigned j = q.deg_y(); j >= 1; --j) {
    acc = p.add(p.mul(acc, c), p.mul(q.coeff(0, j), j % p.value()));
  }
  return acc;
}

// Candidate testing, one coefficient at a time. For n >= 1 the x^n
// coefficient of Q(x, partial + c x^n) equals residual_n + c * dQ/dy(0, a_0)
// because the x^n term can only meet the constant term of the other factors.
// powers[j][k] holds [x^k] y^j for the coefficients fixed so far.
std::vector<Residue> expand_baseline(const BranchSpec& spec, std::size_t terms) {
  const auto& q = spec.q;
  const Prime p = q.prime();
  const unsigned dy = q.deg_y();
  const unsigned dx = q.deg_x();
  std::vector<Residue> a;
  a.reserve(terms);
  if (terms == 0) return a;

  // n = 0: roots of Q(0, y).
  if (!spec.seed.empty()) {
    const Residue a0 = spec.seed[0] % p.value();
    if (value_at_origin(q, a0) != 0) throw NoBranch(0);
    a.push_back(a0);
  } else {
    std::size_t survivors = 0;
    Residue root = 0;
    for (Residue c = 0; c < p.value(); ++c) {
      if (value_at_origin(q, c) == 0) {
        if (++survivors == 2) throw AmbiguousBranch(0);
        root = c;
      }
    }
    if (survivors == 0) throw NoBranch(0);
    a.push_back(root);
  }

  const Residue a0 = a[0];
  const Residue slope = slope_at_origin(q, a0);
  // j * a0^(j-1): the x^n coefficient of y^j picks up this multiple of a_n.
  std::vector<Residue> lift(dy + 1, 0);
  for (unsigned j = 1; j <= dy; ++j) lift[j] = p.mul(j % p.value(), p.pow(a0, j - 1));

  std::vector<std::vector<Residue>> powers(dy + 1, std::vector<Residue>(terms, 0));
  powers[0][0] = 1;
  for (unsigned j = 1; j <= dy; ++j) powers[j][0] = p.pow(a0, j);

  for (std::size_t n = 1; n < terms; ++n) {
    // [x^n] y^j with a_n = 0, built up from y^(j-1).
    for (unsigned j = 1; j <= dy; ++j) {
      std::uint64_t acc = 0;
      const auto& prev = powers[j - 1];
      for (std::size_t k = 1; k <= n; ++k) {
        acc += static_cast<std::uint64_t>(prev[k]) * a[n - k];
        if ((k & 0xffff) == 0) acc %= p.value();
      }
      powers[j][n] = static_cast<Residue>(acc % p.value());
    }
    Residue residual = 0;
    for (unsigned j = 0; j <= dy; ++j) {
      for (unsigned i = 0; i <= dx && i <= n; ++i) {
        const Residue c = q.coeff(i, j);
        if (c != 0) residual = p.add(residual, p.mul(c, powers[j][n - i]));
      }
    }

    Residue an = 0;
    if (n < spec.seed.size()) {
      an = spec.seed[n] % p.value();
      if (p.add(residual, p.mul(an, slope)) != 0) throw NoBranch(n);
    } else if (slope != 0) {
      an = p.mul(p.neg(residual), p.inv(slope));
    } else if (residual == 0) {
      throw AmbiguousBranch(n);
    } else {
      throw NoBranch(n);
    }
    a.push_back(an);
    for (unsigned j = 1; j <= dy; ++j) powers[j][n] = p.add(powers[j][n], p.mul(lift[j], an));
  }
  return a;
}

// Hensel/Newton lifting y <- y - Q(x, y) / Q_y(x, y), doubling the number of
// correct coefficients per round. Requires Q_y(0, a_0) != 0.
std::vector<Residue> expand_newton(const BranchSpec& spec, std::size_t terms) {
  const auto& q = spec.q;
  const Prime p = q.prime();
  const std::size_t start = std::min(terms, std::max<std::size_t>(spec.seed.size(), 1));
  std::vector<Residue> y = expand_baseline(spec, start);
  if (y.empty()) return y;
  if (slope_at_origin(q, y[0]) == 0) {
    throw PreconditionViolation("Newton expansion needs dQ/dy(0, a_0) != 0");
  }
  auto padded = [p](std::vector<Residue> v, std::size_t n) {
    v.resize(n, 0);
    return TruncatedSeries(p, std::move(v));
  };
  std::size_t known = y.size();
  // inv tracks 1 / Q_y(x, y) to the same precision as y; one Newton step for
  // it per round is enough since Q_y(x, y) only changes beyond x^known.
  auto inv = reciprocal(q.evaluate_dy(TruncatedSeries(p, y)));
  while (known < terms) {
    const std::size_t target = std::min(terms, 2 * known);
    y.resize(target, 0);
    const auto widened = padded({inv.coeffs().begin(), inv.coeffs().end()}, target);
    const auto step = multiply(q.evaluate(TruncatedSeries(p, y)), widened);
    for (std::size_t k = known; k < target; ++k) y[k] = p.sub(y[k], step[k]);
    known = target;
    if (known < terms) {
      const auto slope = q.evaluate_dy(TruncatedSeries(p, y));
      auto correction = negate(multiply(slope, widened));
      correction = add(TruncatedSeries::constant(p, 2, target), correction);
      inv = multiply(widened, correction);
    }
  }
  return y;
}

}  // namespace

TruncatedSeries expand_branch(const BranchSpec& spec, std::size_t terms, ExpansionMethod method) {
  const Prime p = spec.prime();
  switch (method) {
    case ExpansionMethod::kBaseline:
      return {p, expand_baseline(spec, terms)};
    case ExpansionMethod::kNewton:
      return {p, expand_newton(spec, terms)};
    case ExpansionMethod::kAuto:
      break;
  }
  // Newton needs a unit slope at the chosen constant term; the seed (or the
  // unique root of Q(0, y)) decides that, so settle a_0 first.
  const auto head = expand_baseline(spec, std::min<std::size_t>(terms, 1));
  if (!head.empty() && slope_at_origin(spec.q, head[0]) != 0) return {p, expand_newton(spec, terms)};
  return {p, expand_baseline(spec, terms)};
}

TruncatedSeries expand_rational(Prime p, std::span<const Residue> numer,
                                std::span<const Residue> denom, std::size_t terms) {
  if (denom.empty() || denom[0] % p.value() == 0) throw NonUnitDenominator();
  auto padded = [&](std::span<const Residue> c) {
    std::vector<Residue> v(terms, 0);
    for (std::size_t i = 0; i < std::min(terms, c.size()); ++i) v[i] = c[i];
    return TruncatedSeries(p, std::move(v));
  };
  return multiply(padded(numer), reciprocal(padded(denom)));
}

bool verify_annihilation(const BivariatePolynomial& q, const TruncatedSeries& f) {
  return q.evaluate(f).is_zero();
}

}  // namespace christol
