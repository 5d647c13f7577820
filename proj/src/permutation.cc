#include "pgrowth/permutation.h"

#include <sstream>

#include "pgrowth/error.h"

namespace pgrowth {

Permutation::Permutation(std::vector<std::uint32_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (auto image : images_) {
    if (image >= images_.size() || seen[image])
      throw Error(ErrorKind::InvalidSpec, "permutation images are not a bijection");
    seen[image] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<std::uint32_t> images(degree);
  for (std::size_t i = 0; i < degree; ++i) images[i] = static_cast<std::uint32_t>(i);
  return Permutation(std::move(images));
}

Permutation Permutation::from_one_based(std::span<const int> images) {
  std::vector<std::uint32_t> zero_based;
  zero_based.reserve(images.size());
  for (int image : images) {
    if (image < 1 || static_cast<std::size_t>(image) > images.size())
      throw Error(ErrorKind::InvalidSpec, "permutation image out of range: " + std::to_string(image));
    zero_based.push_back(static_cast<std::uint32_t>(image - 1));
  }
  return Permutation(std::move(zero_based));
}

Permutation Permutation::from_cycles(std::size_t degree, const std::string& text) {
  std::vector<std::uint32_t> images(degree);
  for (std::size_t i = 0; i < degree; ++i) images[i] = static_cast<std::uint32_t>(i);

  std::size_t pos = 0;
  auto skip_separators = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == ',')) ++pos;
  };
  while (true) {
    skip_separators();
    if (pos >= text.size()) break;
    if (text[pos] != '(') throw Error(ErrorKind::ParseError, "expected '(' in cycle string: " + text);
    ++pos;
    std::vector<std::uint32_t> cycle;
    while (true) {
      skip_separators();
      if (pos >= text.size()) throw Error(ErrorKind::ParseError, "unterminated cycle: " + text);
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      std::size_t used = 0;
      int point = std::stoi(text.substr(pos), &used);
      if (point < 1 || static_cast<std::size_t>(point) > degree)
        throw Error(ErrorKind::ParseError, "cycle point out of range: " + text);
      cycle.push_back(static_cast<std::uint32_t>(point - 1));
      pos += used;
    }
    for (std::size_t i = 0; i < cycle.size(); ++i) images[cycle[i]] = cycle[(i + 1) % cycle.size()];
  }
  return Permutation(std::move(images));
}

Permutation Permutation::then(const Permutation& next) const {
  std::vector<std::uint32_t> images(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) images[i] = next.images_[images_[i]];
  Permutation result;
  result.images_ = std::move(images);
  return result;
}

Permutation Permutation::inverse() const {
  std::vector<std::uint32_t> images(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) images[images_[i]] = static_cast<std::uint32_t>(i);
  Permutation result;
  result.images_ = std::move(images);
  return result;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

std::vector<int> Permutation::one_based() const {
  std::vector<int> out;
  out.reserve(images_.size());
  for (auto image : images_) out.push_back(static_cast<int>(image) + 1);
  return out;
}

std::string Permutation::to_cycle_string() const {
  std::ostringstream out;
  std::vector<bool> done(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (done[start] || images_[start] == start) continue;
    out << '(';
    std::uint32_t point = static_cast<std::uint32_t>(start);
    bool first = true;
    while (!done[point]) {
      done[point] = true;
      if (!first) out << ' ';
      out << point + 1;
      first = false;
      point = images_[point];
    }
    out << ')';
  }
  std::string text = out.str();
  return text.empty() ? "()" : text;
}

}  // namespace pgrowth
