#include "thuelab/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace thuelab {

CycleType::CycleType(std::vector<unsigned> lengths) : lengths_(std::move(lengths)) {
  for (unsigned l : lengths_) {
    if (l < 1) throw std::invalid_argument("cycle length must be >= 1");
  }
  std::sort(lengths_.begin(), lengths_.end(), std::greater<unsigned>());
}

unsigned CycleType::degree() const {
  return std::accumulate(lengths_.begin(), lengths_.end(), 0u);
}

std::uint64_t CycleType::order() const {
  std::uint64_t l = 1;
  for (unsigned k : lengths_) l = std::lcm(l, static_cast<std::uint64_t>(k));
  return l;
}

std::string CycleType::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < lengths_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(lengths_[i]);
  }
  return s + "]";
}

Permutation::Permutation(unsigned degree) : img_(degree) {
  for (unsigned i = 0; i < degree; ++i) img_[i] = static_cast<std::uint16_t>(i);
}

Permutation Permutation::from_images(unsigned degree, const std::vector<unsigned>& images) {
  if (images.size() != degree) throw std::invalid_argument("image list length != degree");
  Permutation p(degree);
  std::vector<bool> seen(degree, false);
  for (unsigned i = 0; i < degree; ++i) {
    unsigned v = images[i];
    if (v < 1 || v > degree) throw std::invalid_argument("image out of range");
    if (seen[v - 1]) throw std::invalid_argument("image list is not a bijection");
    seen[v - 1] = true;
    p.img_[i] = static_cast<std::uint16_t>(v - 1);
  }
  return p;
}

Permutation Permutation::from_cycles(unsigned degree,
                                     const std::vector<std::vector<unsigned>>& cycles) {
  if (degree < 1) throw std::invalid_argument("degree must be >= 1");
  Permutation p(degree);
  std::vector<bool> used(degree, false);
  for (const auto& cyc : cycles) {
    for (unsigned pt : cyc) {
      if (pt < 1 || pt > degree) throw std::invalid_argument("cycle point out of range");
      if (used[pt - 1]) throw std::invalid_argument("repeated point in cycle list");
      used[pt - 1] = true;
    }
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      unsigned from = cyc[i] - 1;
      unsigned to = cyc[(i + 1) % cyc.size()] - 1;
      p.img_[from] = static_cast<std::uint16_t>(to);
    }
  }
  return p;
}

Permutation Permutation::parse_cycles(unsigned degree, std::string_view text) {
  std::vector<std::vector<unsigned>> cycles;
  std::size_t i = 0;
  auto skip_ws = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') throw std::invalid_argument("expected '(' in cycle notation");
    ++i;
    std::vector<unsigned> cyc;
    skip_ws();
    while (i < text.size() && text[i] != ')') {
      if (text[i] == ',') { ++i; skip_ws(); continue; }
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw std::invalid_argument("expected point number in cycle notation");
      unsigned v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + static_cast<unsigned>(text[i] - '0');
        ++i;
      }
      cyc.push_back(v);
      skip_ws();
    }
    if (i >= text.size()) throw std::invalid_argument("unterminated cycle");
    ++i;  // ')'
    if (!cyc.empty()) cycles.push_back(std::move(cyc));
    skip_ws();
  }
  return from_cycles(degree, cycles);
}

bool Permutation::is_identity() const {
  for (unsigned i = 0; i < degree(); ++i)
    if (img_[i] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  Permutation r(degree());
  for (unsigned i = 0; i < degree(); ++i) r.img_[img_[i]] = static_cast<std::uint16_t>(i);
  return r;
}

CycleType Permutation::cycle_type() const {
  std::vector<unsigned> lengths;
  std::vector<bool> seen(degree(), false);
  for (unsigned i = 0; i < degree(); ++i) {
    if (seen[i]) continue;
    unsigned len = 0, j = i;
    do {
      seen[j] = true;
      ++len;
      j = img_[j];
    } while (j != i);
    lengths.push_back(len);
  }
  return CycleType(std::move(lengths));
}

std::vector<std::vector<unsigned>> Permutation::cycles() const {
  std::vector<std::vector<unsigned>> out;
  std::vector<bool> seen(degree(), false);
  for (unsigned i = 0; i < degree(); ++i) {
    if (seen[i] || img_[i] == i) { seen[i] = true; continue; }
    std::vector<unsigned> cyc;
    unsigned j = i;
    do {
      seen[j] = true;
      cyc.push_back(j + 1);
      j = img_[j];
    } while (j != i);
    out.push_back(std::move(cyc));
  }
  return out;
}

std::string Permutation::to_cycle_string() const {
  auto cs = cycles();
  if (cs.empty()) return "()";
  std::ostringstream os;
  for (const auto& cyc : cs) {
    os << '(';
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      if (i) os << ' ';
      os << cyc[i];
    }
    os << ')';
  }
  return os.str();
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) throw std::invalid_argument("compose: degree mismatch");
  Permutation r(p.degree());
  const auto& pi = p.raw();
  const auto& qi = q.raw();
  std::vector<std::uint16_t> img(p.degree());
  for (unsigned i = 0; i < p.degree(); ++i) img[i] = qi[pi[i]];
  return Permutation::from_images(p.degree(), [&] {
    std::vector<unsigned> v(img.size());
    for (std::size_t i = 0; i < img.size(); ++i) v[i] = img[i] + 1u;
    return v;
  }());
}

Permutation conjugate(const Permutation& p, const Permutation& g) {
  return compose(compose(g.inverse(), p), g);
}

std::size_t PermutationHash::operator()(const Permutation& p) const {
  std::size_t h = 1469598103934665603ull;
  for (std::uint16_t v : p.raw()) {
    h ^= v;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace thuelab
