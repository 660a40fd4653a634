#include "grot/levi.hpp"

#include "grot/error.hpp"

namespace grot {

LeviComposition::LeviComposition(std::vector<int> blocks) : blocks_(std::move(blocks)) {
  if (blocks_.empty()) throw DomainError("a Levi composition needs at least one block");
  for (int b : blocks_) {
    if (b < 1) throw DomainError("Levi blocks must be positive");
    total_ += b;
  }
}

std::vector<std::pair<int, int>> LeviComposition::sections() const {
  std::vector<std::pair<int, int>> out;
  int first = 1;
  for (int b : blocks_) {
    out.emplace_back(first, first + b - 1);
    first += b;
  }
  return out;
}

bool LeviComposition::divisible_by(int d) const noexcept {
  for (int b : blocks_)
    if (b % d != 0) return false;
  return true;
}

LeviComposition LeviComposition::divided(int d) const {
  if (!divisible_by(d)) throw DomainError("composition " + str() + " is not divisible by " + std::to_string(d));
  std::vector<int> out;
  for (int b : blocks_) out.push_back(b / d);
  return LeviComposition(std::move(out));
}

LeviComposition LeviComposition::scaled(int d) const {
  std::vector<int> out;
  for (int b : blocks_) out.push_back(b * d);
  return LeviComposition(std::move(out));
}

std::string LeviComposition::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(blocks_[i]);
  }
  return out + ")";
}

std::vector<LeviComposition> compositions(int n) {
  if (n < 1) throw DomainError("compositions(n) needs n >= 1");
  std::vector<LeviComposition> out;
  std::vector<int> current;
  auto recurse = [&](auto&& self, int remaining) -> void {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (int b = 1; b <= remaining; ++b) {
      current.push_back(b);
      self(self, remaining - b);
      current.pop_back();
    }
  };
  recurse(recurse, n);
  return out;
}

}  // namespace grot
