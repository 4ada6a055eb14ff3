#include "matchmod/perm.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace matchmod {

Permutation Permutation::identity(int degree) {
  std::vector<int> im(degree);
  for (int i = 0; i < degree; ++i) im[i] = i + 1;
  return Permutation(std::move(im));
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size(), 0);
  for (int v : images_) {
    if (v < 1 || v > degree() || seen[v - 1])
      throw std::invalid_argument("images are not a bijection on {1..d}");
    seen[v - 1] = 1;
  }
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int i = 0; i < degree(); ++i) inv[images_[i] - 1] = i + 1;
  return Permutation(std::move(inv));
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (images_[i] != i + 1) return false;
  return true;
}

std::vector<int> Permutation::support() const {
  std::vector<int> s;
  for (int i = 1; i <= degree(); ++i)
    if ((*this)(i) != i) s.push_back(i);
  return s;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) throw std::invalid_argument("compose: degree mismatch");
  std::vector<int> im(p.degree());
  for (int x = 1; x <= p.degree(); ++x) im[x - 1] = p(q(x));
  return Permutation(std::move(im));
}

Permutation conjugate(const Permutation& x, const Permutation& g) {
  if (x.degree() != g.degree()) throw std::invalid_argument("conjugate: degree mismatch");
  Permutation ginv = g.inverse();
  std::vector<int> im(x.degree());
  // x maps a -> x(a), so g^-1 x g maps g^-1(a) -> g^-1(x(a))
  for (int a = 1; a <= x.degree(); ++a) im[ginv(a) - 1] = ginv(x(a));
  return Permutation(std::move(im));
}

Partition cycle_type(const Permutation& p) {
  std::vector<char> seen(p.degree(), 0);
  std::vector<int> lengths;
  for (int i = 1; i <= p.degree(); ++i) {
    if (seen[i - 1]) continue;
    int len = 0, j = i;
    do {
      seen[j - 1] = 1;
      j = p(j);
      ++len;
    } while (j != i);
    lengths.push_back(len);
  }
  std::sort(lengths.rbegin(), lengths.rend());
  return Partition(std::move(lengths));
}

int sign(const Permutation& p) {
  int cycles = cycle_type(p).num_parts();
  return ((p.degree() - cycles) % 2 == 0) ? 1 : -1;
}

std::string to_cycle_string(const Permutation& p) {
  std::vector<char> seen(p.degree(), 0);
  std::string out;
  for (int i = 1; i <= p.degree(); ++i) {
    if (seen[i - 1] || p(i) == i) continue;
    out += '(';
    int j = i;
    bool first = true;
    do {
      if (!first) out += ' ';
      out += std::to_string(j);
      seen[j - 1] = 1;
      j = p(j);
      first = false;
    } while (j != i);
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Permutation parse_permutation(const std::string& text, int degree) {
  std::vector<int> im(degree);
  for (int i = 0; i < degree; ++i) im[i] = i + 1;
  std::vector<char> used(degree, 0);

  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  while (pos < text.size()) {
    if (text[pos] != '(') throw std::invalid_argument("expected '(' in cycle notation");
    ++pos;
    std::vector<int> cyc;
    skip_ws();
    while (pos < text.size() && text[pos] != ')') {
      if (!std::isdigit(static_cast<unsigned char>(text[pos])))
        throw std::invalid_argument("expected point in cycle notation");
      int v = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
        v = v * 10 + (text[pos++] - '0');
      if (v < 1 || v > degree) throw std::invalid_argument("point out of range");
      if (used[v - 1]) throw std::invalid_argument("repeated point in cycle notation");
      used[v - 1] = 1;
      cyc.push_back(v);
      skip_ws();
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        skip_ws();
      }
    }
    if (pos >= text.size()) throw std::invalid_argument("unterminated cycle");
    ++pos;  // ')'
    for (std::size_t i = 0; i < cyc.size(); ++i)
      im[cyc[i] - 1] = cyc[(i + 1) % cyc.size()];
    skip_ws();
  }
  return Permutation(std::move(im));
}

}  // namespace matchmod
