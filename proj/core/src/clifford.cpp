#include "spinten/clifford.hpp"

#include <algorithm>
#include <bit>

namespace spinten {

namespace {

std::array<std::uint8_t, 16> make_subsets(int parity) {
  // Ascending cardinality of the fixed parity, lexicographic within a size.
  std::vector<std::uint8_t> list;
  for (int size = 0; size <= 5; ++size) {
    if (size % 2 != parity) continue;
    std::vector<std::uint8_t> of_size;
    for (std::uint8_t m = 0; m < 32; ++m)
      if (std::popcount(m) == size) of_size.push_back(m);
    std::sort(of_size.begin(), of_size.end(), [](std::uint8_t a, std::uint8_t b) {
      // Lexicographic on sorted element lists: compare smallest elements first.
      while (a && b) {
        const int ea = std::countr_zero(a), eb = std::countr_zero(b);
        if (ea != eb) return ea < eb;
        a &= static_cast<std::uint8_t>(a - 1);
        b &= static_cast<std::uint8_t>(b - 1);
      }
      return a < b;
    });
    list.insert(list.end(), of_size.begin(), of_size.end());
  }
  std::array<std::uint8_t, 16> out{};
  std::copy(list.begin(), list.end(), out.begin());
  return out;
}

const std::array<std::uint8_t, 16> kEven = make_subsets(0);
const std::array<std::uint8_t, 16> kOdd = make_subsets(1);

std::array<int, 32> make_index() {
  std::array<int, 32> idx{};
  for (int i = 0; i < 16; ++i) {
    idx[kEven[i]] = i;
    idx[kOdd[i]] = i;
  }
  return idx;
}

const std::array<int, 32> kIndex = make_index();

/// Sign of e_T ^ e_U for disjoint subsets: parity of #{(t,u) : t in T, u in U, t > u}.
int wedge_sign(std::uint8_t t, std::uint8_t u) {
  int inv = 0;
  for (int a = 0; a < 5; ++a)
    if (t & (1u << a))
      inv += std::popcount(static_cast<unsigned>(u & ((1u << a) - 1)));
  return inv % 2 == 0 ? 1 : -1;
}

int alpha_sign(int m) { return (m * (m - 1) / 2) % 2 == 0 ? 1 : -1; }

IntMat16 make_gamma(int j, Parity from) {
  IntMat16 m{};
  const bool wedge = (j % 2 == 0);
  const int k = (j + 1) / 2;
  const std::uint8_t kbit = static_cast<std::uint8_t>(1u << (k - 1));
  const auto& src = from == Parity::even ? kEven : kOdd;
  for (int col = 0; col < 16; ++col) {
    const std::uint8_t t = src[col];
    if (wedge ? (t & kbit) : !(t & kbit)) continue;
    const int below = std::popcount(static_cast<unsigned>(t & (kbit - 1)));
    m[kIndex[t ^ kbit]][col] = below % 2 == 0 ? 1 : -1;
  }
  return m;
}

IntMat16 make_pairing() {
  IntMat16 b{};
  for (int i = 0; i < 16; ++i) {
    const std::uint8_t t = kOdd[i];
    const std::uint8_t comp = static_cast<std::uint8_t>(~t & 0x1f);
    b[i][kIndex[comp]] = alpha_sign(std::popcount(t)) * wedge_sign(t, comp);
  }
  return b;
}

}  // namespace

const std::array<std::uint8_t, 16>& SpinorBasis::subsets(Parity p) {
  return p == Parity::even ? kEven : kOdd;
}

int SpinorBasis::index_of(std::uint8_t subset) { return kIndex[subset & 0x1f]; }

Parity SpinorBasis::parity_of(std::uint8_t subset) {
  return std::popcount(static_cast<unsigned>(subset & 0x1f)) % 2 == 0 ? Parity::even
                                                                      : Parity::odd;
}

std::string SpinorBasis::label(std::uint8_t subset) {
  std::string s = "{";
  bool first = true;
  for (int k = 1; k <= 5; ++k)
    if (subset & (1u << (k - 1))) {
      if (!first) s += ",";
      s += std::to_string(k);
      first = false;
    }
  return s + "}";
}

const IntMat16& gamma_matrix_int(int j, Parity from) {
  if (j < 1 || j > 10) throw std::invalid_argument("gamma_matrix_int: index in [1,10]");
  static const auto tables = [] {
    std::array<std::array<IntMat16, 10>, 2> t{};
    for (int jj = 1; jj <= 10; ++jj) {
      t[0][jj - 1] = make_gamma(jj, Parity::even);
      t[1][jj - 1] = make_gamma(jj, Parity::odd);
    }
    return t;
  }();
  return tables[from == Parity::even ? 0 : 1][j - 1];
}

const IntMat16& pairing_matrix_int() {
  static const IntMat16 b = make_pairing();
  return b;
}

int bilinear_int(int i, int j) {
  if (i < 1 || i > 10 || j < 1 || j > 10)
    throw std::invalid_argument("bilinear_int: indices in [1,10]");
  if ((i + 1) / 2 != (j + 1) / 2) return 0;
  return i != j ? 1 : 0;
}

}  // namespace spinten
