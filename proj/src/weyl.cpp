#include "grot/weyl.hpp"

#include <algorithm>

#include "grot/error.hpp"
#include "grot/hopf.hpp"

namespace grot {

BlockPermutation::BlockPermutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size() + 1, 0);
  for (int y : images_) {
    if (y < 1 || y > static_cast<int>(images_.size()) || seen[static_cast<std::size_t>(y)])
      throw DomainError("not a permutation");
    seen[static_cast<std::size_t>(y)] = 1;
  }
}

BlockPermutation BlockPermutation::identity(int n) {
  std::vector<int> im(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) im[static_cast<std::size_t>(i)] = i + 1;
  return BlockPermutation(std::move(im));
}

BlockPermutation BlockPermutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x)
    inv[static_cast<std::size_t>(images_[x] - 1)] = static_cast<int>(x) + 1;
  return BlockPermutation(std::move(inv));
}

namespace {

std::vector<int> section_of(const LeviComposition& l) {
  std::vector<int> out;
  for (std::size_t i = 0; i < l.size(); ++i)
    for (int k = 0; k < l[i]; ++k) out.push_back(static_cast<int>(i));
  return out;
}

}  // namespace

std::vector<BlockPermutation> shuffle_set(const LeviComposition& l1, const LeviComposition& l2) {
  if (l1.total() != l2.total()) throw DomainError("shuffle_set: compositions of different sizes");
  const int n = l1.total();
  const auto sec1 = section_of(l1);
  const auto sections2 = l2.sections();
  // next[j]: next unused value of L2-section j. Since w^-1 is increasing on
  // each L2-section, values of a section are handed out in increasing order.
  std::vector<int> next;
  for (auto [first, last] : sections2) next.push_back(first);

  std::vector<BlockPermutation> out;
  std::vector<int> images(static_cast<std::size_t>(n));
  auto recurse = [&](auto&& self, int x) -> void {
    if (x > n) {
      out.emplace_back(images);
      return;
    }
    const auto xi = static_cast<std::size_t>(x - 1);
    const bool continues = x > 1 && sec1[xi] == sec1[xi - 1];
    for (std::size_t j = 0; j < sections2.size(); ++j) {
      const int v = next[j];
      if (v > sections2[j].second) continue;
      if (continues && v < images[xi - 1]) continue;
      images[xi] = v;
      ++next[j];
      self(self, x + 1);
      --next[j];
    }
  };
  recurse(recurse, 1);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<int>> intersection_sizes(const BlockPermutation& w,
                                                 const LeviComposition& l1,
                                                 const LeviComposition& l2) {
  const auto sec1 = section_of(l1);
  const auto sec2 = section_of(l2);
  std::vector<std::vector<int>> out(l1.size(), std::vector<int>(l2.size(), 0));
  for (int x = 1; x <= w.size(); ++x)
    ++out[static_cast<std::size_t>(sec1[static_cast<std::size_t>(x - 1)])]
         [static_cast<std::size_t>(sec2[static_cast<std::size_t>(w(x) - 1)])];
  return out;
}

BlockPermutation block_embed(const BlockPermutation& tau, int d) {
  if (d < 1) throw DomainError("block_embed: d must be positive");
  std::vector<int> images(static_cast<std::size_t>(tau.size() * d));
  for (int a = 1; a <= tau.size(); ++a)
    for (int b = 0; b < d; ++b)
      images[static_cast<std::size_t>(a * d - b - 1)] = tau(a) * d - b;
  return BlockPermutation(std::move(images));
}

std::vector<BlockPermutation> shuffle_set_d(const LeviComposition& l1, const LeviComposition& l2,
                                            int d) {
  if (d < 1 || !l1.divisible_by(d) || !l2.divisible_by(d))
    throw DomainError("shuffle_set_d: blocks of " + l1.str() + " and " + l2.str() +
                      " must be divisible by " + std::to_string(d));
  std::vector<BlockPermutation> out;
  for (auto& w : shuffle_set(l1, l2)) {
    bool ok = true;
    for (const auto& row : intersection_sizes(w, l1, l2))
      for (int m : row)
        if (m % d != 0) ok = false;
    if (ok) out.push_back(std::move(w));
  }
  return out;
}

TensorRep geometric_lemma(const LeviComposition& l1, const LeviComposition& l2,
                          std::span<const Segment> factors) {
  if (factors.size() != l1.size()) throw DomainError("geometric_lemma: one factor per L1 block");
  for (std::size_t i = 0; i < factors.size(); ++i)
    if (factors[i].degree() != l1[i])
      throw DomainError("geometric_lemma: factor degree does not match its L1 block");
  if (l1.total() != l2.total()) throw DomainError("geometric_lemma: size mismatch");
  const Side side = factors.empty() ? Side::F : factors.front().side();

  TensorRep out(side, Basis::Standard, l2.size());
  for (const auto& w : shuffle_set(l1, l2)) {
    const auto sizes = intersection_sizes(w, l1, l2);
    // slots[j] collects the pieces landing in L2-block j.
    std::vector<std::vector<Segment>> slots(l2.size());
    bool vanishes = false;
    for (std::size_t i = 0; i < factors.size() && !vanishes; ++i) {
      std::vector<int> blocks;
      std::vector<std::size_t> targets;
      for (std::size_t j = 0; j < l2.size(); ++j) {
        if (sizes[i][j] == 0) continue;
        blocks.push_back(sizes[i][j]);
        targets.push_back(j);
      }
      const auto restricted = restrict_esci(factors[i], LeviComposition(blocks));
      if (restricted.is_zero()) {
        vanishes = true;
        break;
      }
      const auto& pieces = restricted.terms().begin()->first;
      for (std::size_t k = 0; k < pieces.size(); ++k)
        for (const auto& seg : pieces[k].segments()) slots[targets[k]].push_back(seg);
    }
    if (vanishes) continue;
    TensorRep::Key key;
    for (auto& slot : slots) key.emplace_back(side, std::move(slot));
    out.add_term(key, 1);
  }
  return out;
}

TensorRep geometric_lemma(const Multisegment& key, const LeviComposition& l2) {
  std::vector<int> blocks;
  for (const auto& s : key.segments()) blocks.push_back(s.degree());
  if (blocks.empty()) throw DomainError("geometric_lemma: empty key");
  return geometric_lemma(LeviComposition(blocks), l2, key.segments());
}

}  // namespace grot
