#include "convolution.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

#include "christol/errors.hpp"

namespace christol::detail {

namespace {

constexpr std::size_t kSchoolbookCutoff = 64;

// Both support transforms of length up to 2^23; their product (~2^58.7)
// exceeds the largest exact coefficient (2^22 * (2^16)^2 = 2^54).
constexpr std::uint32_t kPrimeA = 998244353;  // 119 * 2^23 + 1
constexpr std::uint32_t kPrimeB = 469762049;  // 7 * 2^26 + 1
constexpr std::uint32_t kGenerator = 3;       // primitive root of both
constexpr std::size_t kMaxTransform = std::size_t{1} << 23;

std::uint32_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint32_t m) {
  std::uint64_t r = 1;
  b %= m;
  for (; e; e >>= 1, b = b * b % m)
    if (e & 1) r = r * b % m;
  return static_cast<std::uint32_t>(r);
}

template <std::uint32_t mod>
void ntt(std::vector<std::uint32_t>& a, bool inverse) {
  const std::size_t n = a.size();
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    std::uint32_t w = pow_mod(kGenerator, (mod - 1) / len, mod);
    if (inverse) w = pow_mod(w, mod - 2, mod);
    // Shoup: with w' = floor(w 2^32 / mod), a w - ((a w') >> 32) mod lies in [0, 2 mod).
    std::vector<std::uint32_t> roots(len / 2), shoup(len / 2);
    roots[0] = 1;
    for (std::size_t k = 1; k < len / 2; ++k) roots[k] = static_cast<std::uint32_t>(std::uint64_t{roots[k - 1]} * w % mod);
    for (std::size_t k = 0; k < len / 2; ++k) shoup[k] = static_cast<std::uint32_t>((std::uint64_t{roots[k]} << 32) / mod);
    const std::size_t half = len / 2;
    for (std::size_t i = 0; i < n; i += len) {
      std::uint32_t* lo = a.data() + i;
      std::uint32_t* hi = lo + half;
      for (std::size_t k = 0; k < half; ++k) {
        const std::uint32_t q = static_cast<std::uint32_t>((std::uint64_t{hi[k]} * shoup[k]) >> 32);
        std::uint32_t v = hi[k] * roots[k] - q * mod;
        if (v >= mod) v -= mod;
        const std::uint32_t u = lo[k];
        lo[k] = u + v >= mod ? u + v - mod : u + v;
        hi[k] = u >= v ? u - v : u + mod - v;
      }
    }
  }
  if (inverse) {
    const std::uint64_t inv_n = pow_mod(n, mod - 2, mod);
    for (auto& x : a) x = static_cast<std::uint32_t>(x * inv_n % mod);
  }
}

template <std::uint32_t mod>
std::vector<std::uint32_t> cyclic_product(std::span<const Residue> a, std::span<const Residue> b, std::size_t size) {
  std::vector<std::uint32_t> fa(size, 0), fb(size, 0);
  std::copy(a.begin(), a.end(), fa.begin());
  std::copy(b.begin(), b.end(), fb.begin());
  ntt<mod>(fa, false);
  ntt<mod>(fb, false);
  for (std::size_t i = 0; i < size; ++i) fa[i] = static_cast<std::uint32_t>(std::uint64_t{fa[i]} * fb[i] % mod);
  ntt<mod>(fa, true);
  return fa;
}

}  // namespace

std::vector<Residue> convolve(Prime p, std::span<const Residue> a, std::span<const Residue> b) {
  if (a.empty() || b.empty()) return {};
  const std::size_t out_size = a.size() + b.size() - 1;
  std::vector<Residue> out(out_size);
  if (std::min(a.size(), b.size()) <= kSchoolbookCutoff) {
    std::vector<std::uint64_t> acc(out_size, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] == 0) continue;
      const std::uint64_t ai = a[i];
      for (std::size_t j = 0; j < b.size(); ++j) acc[i + j] += ai * b[j];
    }
    for (std::size_t k = 0; k < out_size; ++k) out[k] = static_cast<Residue>(acc[k] % p.value());
    return out;
  }
  const std::size_t size = std::bit_ceil(out_size);
  if (size > kMaxTransform || std::max(a.size(), b.size()) > (std::size_t{1} << 22)) {
    throw PreconditionViolation("series too long for exact convolution");
  }
  const auto ra = cyclic_product<kPrimeA>(a, b, size);
  const auto rb = cyclic_product<kPrimeB>(a, b, size);
  // Garner: x = ra + kPrimeA * ((rb - ra) * kPrimeA^-1 mod kPrimeB)
  const std::uint64_t inv_a = pow_mod(kPrimeA, kPrimeB - 2, kPrimeB);
  for (std::size_t k = 0; k < out_size; ++k) {
    const std::uint64_t diff = (rb[k] + kPrimeB - ra[k] % kPrimeB) % kPrimeB;
    const std::uint64_t t = diff * inv_a % kPrimeB;
    const std::uint64_t x = ra[k] + kPrimeA * t;  // < 2^59
    out[k] = static_cast<Residue>(x % p.value());
  }
  return out;
}

}  // namespace christol::detail
