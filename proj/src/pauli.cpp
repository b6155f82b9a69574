#include "cws/pauli.hpp"

#include <stdexcept>

#include "cws/gf2.hpp"

namespace cws {

namespace {

BitVec concat(const BitVec& a, const BitVec& b) {
  BitVec out(a.size() + b.size());
  for (std::size_t i = 0; i < a.size(); ++i) out.set(i, a.get(i));
  for (std::size_t i = 0; i < b.size(); ++i) out.set(a.size() + i, b.get(i));
  return out;
}

}  // namespace

PauliOperator::PauliOperator(BitVec u, BitVec v, int phase)
    : u_(std::move(u)), v_(std::move(v)),
      phase_(static_cast<std::uint8_t>(((phase % 4) + 4) % 4)) {
  if (u_.size() != v_.size()) {
    throw std::invalid_argument("PauliOperator: X and Z parts differ in length");
  }
}

PauliOperator PauliOperator::from_string(std::string_view s) {
  int p = 0;
  if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
    p = (s[0] == '-') ? 2 : 0;
    s.remove_prefix(1);
    if (!s.empty() && s[0] == 'i') {
      p += 1;
      s.remove_prefix(1);
    }
  } else if (!s.empty() && s[0] == 'i') {
    p = 1;
    s.remove_prefix(1);
  }
  if (s.empty()) {
    throw std::invalid_argument("Pauli string has no letters");
  }
  BitVec u(s.size()), v(s.size());
  for (std::size_t q = 0; q < s.size(); ++q) {
    switch (s[q]) {
      case 'I': break;
      case 'X': u.set(q, true); break;
      case 'Z': v.set(q, true); break;
      case 'Y':
        u.set(q, true);
        v.set(q, true);
        p += 1;  // Y = i XZ per letter
        break;
      default:
        throw std::invalid_argument("invalid Pauli letter: " +
                                    std::string(1, s[q]));
    }
  }
  return PauliOperator(std::move(u), std::move(v), p);
}

PauliOperator PauliOperator::single(std::size_t n, std::size_t q,
                                    char letter) {
  if (q >= n) {
    throw std::invalid_argument("qubit index out of range");
  }
  std::string s(n, 'I');
  s[q] = letter;
  return from_string(s);
}

int PauliOperator::sign() const {
  const int q = (phase_ - (u_.dot(v_) ? 1 : 0) + 4) % 4;
  if (q == 0) return 1;
  if (q == 2) return -1;
  throw std::logic_error("sign() called on a non-Hermitian Pauli");
}

PauliOperator PauliOperator::adjoint() const {
  // (i^p X^u Z^v)^† = i^{-p} Z^v X^u = i^{-p} (-1)^{u.v} X^u Z^v.
  const int p = (-phase_ + (u_.dot(v_) ? 2 : 0) + 8) % 4;
  return PauliOperator(u_, v_, p);
}

std::size_t PauliOperator::weight() const {
  std::size_t w = 0;
  for (std::size_t q = 0; q < u_.size(); ++q) {
    if (u_.get(q) || v_.get(q)) ++w;
  }
  return w;
}

std::string PauliOperator::str() const {
  std::string letters(u_.size(), 'I');
  int y_count = 0;
  for (std::size_t q = 0; q < u_.size(); ++q) {
    const bool x = u_.get(q), z = v_.get(q);
    if (x && z) {
      letters[q] = 'Y';
      ++y_count;
    } else if (x) {
      letters[q] = 'X';
    } else if (z) {
      letters[q] = 'Z';
    }
  }
  static const char* prefix[4] = {"", "+i", "-", "-i"};
  return prefix[((phase_ - y_count) % 4 + 4) % 4] + letters;
}

PauliOperator multiply(const PauliOperator& a, const PauliOperator& b) {
  if (a.num_qubits() != b.num_qubits()) {
    throw std::invalid_argument("Pauli product: qubit counts differ");
  }
  const int p = a.phase_exponent() + b.phase_exponent() +
                (a.z_part().dot(b.x_part()) ? 2 : 0);
  return PauliOperator(a.x_part() ^ b.x_part(), a.z_part() ^ b.z_part(), p);
}

bool commutes(const PauliOperator& a, const PauliOperator& b) {
  if (a.num_qubits() != b.num_qubits()) {
    throw std::invalid_argument("commutes: qubit counts differ");
  }
  return a.x_part().dot(b.z_part()) == a.z_part().dot(b.x_part());
}

std::vector<PauliOperator> enumerate_errors_of_weight(std::size_t n, int w) {
  if (w < 1 || static_cast<std::size_t>(w) > n) {
    throw std::invalid_argument("error weight out of range");
  }
  std::vector<PauliOperator> out;
  // Letters in Z < X < Y order as (u, v) pairs.
  static constexpr bool LETTER_U[3] = {false, true, true};
  static constexpr bool LETTER_V[3] = {true, false, true};

  std::vector<std::size_t> support(w);
  for (int i = 0; i < w; ++i) support[i] = i;
  for (;;) {
    std::vector<int> letters(w, 0);
    for (;;) {
      BitVec u(n), v(n);
      for (int i = 0; i < w; ++i) {
        u.set(support[i], LETTER_U[letters[i]]);
        v.set(support[i], LETTER_V[letters[i]]);
      }
      out.emplace_back(std::move(u), std::move(v), 0);
      // Odometer over letters; last support position varies fastest.
      int pos = w - 1;
      while (pos >= 0 && letters[pos] == 2) {
        letters[pos] = 0;
        --pos;
      }
      if (pos < 0) break;
      ++letters[pos];
    }
    // Next support combination in lexicographic order.
    int i = w - 1;
    while (i >= 0 && support[i] == n - static_cast<std::size_t>(w - i)) --i;
    if (i < 0) break;
    ++support[i];
    for (int j = i + 1; j < w; ++j) support[j] = support[j - 1] + 1;
  }
  return out;
}

std::vector<PauliOperator> enumerate_errors(std::size_t n, int max_weight) {
  if (max_weight < 1 || static_cast<std::size_t>(max_weight) > n) {
    throw std::invalid_argument("max_weight out of range");
  }
  std::vector<PauliOperator> out;
  for (int w = 1; w <= max_weight; ++w) {
    auto slice = enumerate_errors_of_weight(n, w);
    out.insert(out.end(), std::make_move_iterator(slice.begin()),
               std::make_move_iterator(slice.end()));
  }
  return out;
}

bool is_valid_stabilizer(const PauliGroupSubset& group) {
  const auto& gens = group.generators;
  for (const PauliOperator& g : gens) {
    if (g.num_qubits() != group.n) return false;
    // A generator must square to +I, else its square is -I.
    if (multiply(g, g).phase_exponent() != 0) return false;
  }
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      if (!commutes(gens[i], gens[j])) return false;
    }
  }
  std::vector<BitVec> symplectic;
  symplectic.reserve(gens.size());
  for (const PauliOperator& g : gens) {
    symplectic.push_back(concat(g.x_part(), g.z_part()));
  }
  // Independence: with commuting self-inverse generators this also rules
  // out any product landing on -I or +/-iI.
  return gf2_rank(symplectic) == gens.size();
}

}  // namespace cws
