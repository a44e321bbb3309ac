#include "christol/power_series.hpp"

#include <algorithm>
#include <cctype>

#include "christol/errors.hpp"
#include "convolution.hpp"

namespace christol {

namespace {

void check_same(Prime a, Prime b) {
  if (a != b) throw ModulusMismatch(a.value(), b.value());
}

}  // namespace

TruncatedSeries::TruncatedSeries(Prime p, std::vector<Residue> coeffs)
    : p_(p), coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c %= p_.value();
}

TruncatedSeries TruncatedSeries::zero(Prime p, std::size_t precision) {
  return {p, std::vector<Residue>(precision, 0)};
}

TruncatedSeries TruncatedSeries::constant(Prime p, Residue c, std::size_t precision) {
  std::vector<Residue> v(precision, 0);
  if (precision > 0) v[0] = c;
  return {p, std::move(v)};
}

bool TruncatedSeries::is_zero() const noexcept {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](Residue c) { return c == 0; });
}

TruncatedSeries add(const TruncatedSeries& f, const TruncatedSeries& g,
                    std::optional<FpElement> scalar) {
  const Prime p = f.prime();
  check_same(p, g.prime());
  Residue s = 1;
  if (scalar) {
    check_same(p, scalar->prime());
    s = scalar->value();
  }
  const std::size_t n = std::min(f.precision(), g.precision());
  std::vector<Residue> out(n);
  for (std::size_t j = 0; j < n; ++j) out[j] = p.add(p.mul(s, f[j]), g[j]);
  return {p, std::move(out)};
}

TruncatedSeries scale(const TruncatedSeries& f, FpElement c) {
  const Prime p = f.prime();
  check_same(p, c.prime());
  std::vector<Residue> out(f.coeffs().begin(), f.coeffs().end());
  for (auto& v : out) v = p.mul(v, c.value());
  return {p, std::move(out)};
}

TruncatedSeries negate(const TruncatedSeries& f) { return scale(f, FpElement(-1, f.prime())); }

TruncatedSeries multiply(const TruncatedSeries& f, const TruncatedSeries& g) {
  const Prime p = f.prime();
  check_same(p, g.prime());
  const std::size_t n = std::min(f.precision(), g.precision());
  auto effective = [n](const TruncatedSeries& s) {
    auto c = s.coeffs().first(n);
    std::size_t len = c.size();
    while (len > 0 && c[len - 1] == 0) --len;
    return c.first(len);
  };
  auto product = detail::convolve(p, effective(f), effective(g));
  product.resize(n);
  return {p, std::move(product)};
}

TruncatedSeries shift(const TruncatedSeries& f, std::size_t k) {
  std::vector<Residue> out(k, 0);
  out.insert(out.end(), f.coeffs().begin(), f.coeffs().end());
  return {f.prime(), std::move(out)};
}

TruncatedSeries derivative(const TruncatedSeries& f, std::size_t times) {
  const Prime p = f.prime();
  if (times >= f.precision()) return TruncatedSeries::zero(p, 0);
  const std::size_t n = f.precision() - times;
  std::vector<Residue> out(n);
  for (std::size_t j = 0; j < n; ++j) {
    // (j+m)(j+m-1)...(j+1) mod p
    Residue factor = 1;
    for (std::size_t t = 1; t <= times && factor != 0; ++t) {
      factor = p.mul(factor, static_cast<Residue>((j + t) % p.value()));
    }
    out[j] = p.mul(factor, f[j + times]);
  }
  return {p, std::move(out)};
}

TruncatedSeries pth_root(const TruncatedSeries& f) {
  const Prime p = f.prime();
  const std::size_t step = p.value();
  for (std::size_t j = 0; j < f.precision(); ++j) {
    if (j % step != 0 && f[j] != 0) throw NotAPthPower(j);
  }
  const std::size_t n = (f.precision() + step - 1) / step;
  std::vector<Residue> out(n);
  for (std::size_t m = 0; m < n; ++m) out[m] = pth_root(FpElement(f[m * step], p)).value();
  return {p, std::move(out)};
}

TruncatedSeries frobenius(const TruncatedSeries& f) {
  const std::size_t step = f.prime().value();
  std::vector<Residue> out(f.precision() * step, 0);
  for (std::size_t m = 0; m < f.precision(); ++m) out[m * step] = f[m];
  return {f.prime(), std::move(out)};
}

TruncatedSeries truncate(const TruncatedSeries& f, std::size_t n) {
  n = std::min(n, f.precision());
  return {f.prime(), std::vector<Residue>(f.coeffs().begin(), f.coeffs().begin() + n)};
}

TruncatedSeries reciprocal(const TruncatedSeries& f) {
  const Prime p = f.prime();
  const std::size_t n = f.precision();
  if (n == 0) return f;
  if (f[0] == 0) throw NonUnitDenominator();
  // Newton: g <- g (2 - f g) doubles the number of correct terms.
  TruncatedSeries g(p, {p.inv(f[0])});
  for (std::size_t known = 1; known < n;) {
    const std::size_t target = std::min(n, 2 * known);
    std::vector<Residue> padded(g.coeffs().begin(), g.coeffs().end());
    padded.resize(target, 0);
    g = TruncatedSeries(p, std::move(padded));
    auto correction = negate(multiply(truncate(f, target), g));
    correction = add(TruncatedSeries::constant(p, 2, target), correction);
    g = multiply(g, correction);
    known = target;
  }
  return g;
}

std::vector<Residue> parse_residues(std::string_view text, Prime p) {
  std::vector<Residue> out;
  auto is_blank = [](std::string_view s) {
    return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); });
  };
  if (is_blank(text)) return out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    std::string_view item = text.substr(start, comma == std::string_view::npos ? text.npos
                                                                                : comma - start);
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.front()))) item.remove_prefix(1);
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.back()))) item.remove_suffix(1);
    if (item.empty()) throw SyntaxError(start, "empty entry in coefficient list");
    Residue r = 0;
    for (std::size_t i = 0; i < item.size(); ++i) {
      const char c = item[i];
      if (c < '0' || c > '9') throw SyntaxError(start + i, "expected a decimal residue");
      r = static_cast<Residue>((static_cast<std::uint64_t>(r) * 10 + (c - '0')) % p.value());
    }
    out.push_back(r);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

TruncatedSeries parse_series(std::string_view text, Prime p) {
  return {p, parse_residues(text, p)};
}

std::string format_series(const TruncatedSeries& f) {
  std::string out;
  for (std::size_t j = 0; j < f.precision(); ++j) {
    if (j) out += ',';
    out += std::to_string(f[j]);
  }
  return out;
}

}  // namespace christol
