#include "gtrace/permutation.hpp"

#include <cctype>
#include <numeric>

#include "gtrace/errors.hpp"

namespace gtrace {

Permutation::Permutation(std::vector<std::uint32_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (auto x : images_) {
    if (x >= images_.size() || seen[x]) throw InputError("images do not form a permutation");
    seen[x] = true;
  }
}

Permutation Permutation::identity(std::uint32_t degree) {
  std::vector<std::uint32_t> images(degree);
  std::iota(images.begin(), images.end(), 0u);
  return Permutation(std::move(images));
}

Permutation Permutation::parse(std::string_view text, std::uint32_t degree) {
  if (degree == 0) throw InputError("degree must be positive");
  std::vector<std::uint32_t> images(degree);
  std::iota(images.begin(), images.end(), 0u);
  std::vector<bool> used(degree, false);

  auto fail = [&](const std::string& why) {
    throw InputError("bad cycle notation '" + std::string(text) + "': " + why);
  };

  std::size_t pos = 0;
  auto skip_blank = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };

  skip_blank();
  if (pos == text.size()) fail("empty input");
  while (pos < text.size()) {
    if (text[pos] != '(') fail("expected '('");
    ++pos;
    std::vector<std::uint32_t> cycle;
    for (;;) {
      skip_blank();
      if (pos < text.size() && text[pos] == ',') {
        if (cycle.empty()) fail("unexpected ','");
        ++pos;
        skip_blank();
      }
      if (pos >= text.size()) fail("unterminated cycle");
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[pos]))) fail("unexpected character");
      std::uint64_t value = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        value = value * 10 + static_cast<std::uint64_t>(text[pos] - '0');
        if (value > degree) fail("point out of range 1.." + std::to_string(degree));
        ++pos;
      }
      if (value == 0) fail("point out of range 1.." + std::to_string(degree));
      auto p = static_cast<std::uint32_t>(value - 1);
      if (used[p]) fail("repeated point " + std::to_string(value));
      used[p] = true;
      cycle.push_back(p);
    }
    if (cycle.size() == 1) fail("singleton cycle");
    for (std::size_t i = 0; i < cycle.size(); ++i) images[cycle[i]] = cycle[(i + 1) % cycle.size()];
    skip_blank();
  }
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const {
  for (std::uint32_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<std::uint32_t> inv(images_.size());
  for (std::uint32_t i = 0; i < images_.size(); ++i) inv[images_[i]] = i;
  return Permutation(std::move(inv));
}

std::uint64_t Permutation::order() const {
  std::uint64_t result = 1;
  std::vector<bool> seen(images_.size(), false);
  for (std::uint32_t start = 0; start < images_.size(); ++start) {
    if (seen[start]) continue;
    std::uint64_t len = 0;
    for (auto x = start; !seen[x]; x = images_[x]) {
      seen[x] = true;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

std::string Permutation::to_cycles() const {
  std::string out;
  std::vector<bool> seen(images_.size(), false);
  for (std::uint32_t start = 0; start < images_.size(); ++start) {
    if (seen[start] || images_[start] == start) continue;
    out += '(';
    for (auto x = start; !seen[x]; x = images_[x]) {
      seen[x] = true;
      if (x != start) out += ' ';
      out += std::to_string(x + 1);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw InputError("composing permutations of different degree");
  std::vector<std::uint32_t> images(a.degree());
  for (std::uint32_t i = 0; i < images.size(); ++i) images[i] = a.images_[b.images_[i]];
  Permutation out;
  out.images_ = std::move(images);
  return out;
}

}  // namespace gtrace
