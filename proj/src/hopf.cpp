#include "grot/hopf.hpp"

#include <map>

#include "grot/error.hpp"

namespace grot {

namespace {

void require_standard(const VirtualRep& x, const char* op) {
  if (x.basis() != Basis::Standard)
    throw DomainError(std::string(op) + " requires the Standard basis");
}

// Cut `s` into pieces of the given exponent counts, top piece first. Zero
// counts give no segment.
std::vector<std::optional<Segment>> cut(const Segment& s, const std::vector<int>& counts) {
  std::vector<std::optional<Segment>> out;
  int top = s.length();  // exclusive index of the remaining exponents
  for (int c : counts) {
    if (c == 0) {
      out.emplace_back(std::nullopt);
      continue;
    }
    const int first = top - c;
    out.emplace_back(s.with_range(s.start() + first * s.step(), c));
    top = first;
  }
  return out;
}

// Enumerate every way to cut each segment of `key` into `arity` pieces whose
// slot degrees stay within `capacity` (no bound when empty), invoking
// `emit` with the slot keys.
template <typename Emit>
void enumerate_cuts(const Multisegment& key, std::size_t arity, const std::vector<int>& capacity,
                    Emit&& emit) {
  const auto segs = key.segments();
  std::vector<std::vector<Segment>> slots(arity);
  std::vector<int> remaining = capacity;

  auto per_segment = [&](auto&& self, std::size_t si) -> void {
    if (si == segs.size()) {
      for (int r : remaining)
        if (r != 0) return;
      TensorRep::Key out;
      out.reserve(arity);
      for (auto& slot : slots) out.emplace_back(key.side(), slot);
      emit(out);
      return;
    }
    const Segment& s = segs[si];
    std::vector<int> counts(arity, 0);
    auto fits = [&](std::size_t slot, int c) {
      return capacity.empty() || c * s.unit_degree() <= remaining[slot];
    };
    auto place = [&] {
      auto pieces = cut(s, counts);
      for (std::size_t k = 0; k < arity; ++k) {
        if (!pieces[k]) continue;
        slots[k].push_back(*pieces[k]);
        if (!capacity.empty()) remaining[k] -= pieces[k]->degree();
      }
      self(self, si + 1);
      for (std::size_t k = 0; k < arity; ++k) {
        if (!pieces[k]) continue;
        slots[k].pop_back();
        if (!capacity.empty()) remaining[k] += pieces[k]->degree();
      }
    };
    // Distribute the exponents of s over the slots, top piece first.
    auto distribute = [&](auto&& dist, std::size_t slot, int left) -> void {
      if (slot + 1 == arity) {
        if (!fits(slot, left)) return;
        counts[slot] = left;
        place();
        return;
      }
      for (int c = 0; c <= left && fits(slot, c); ++c) {
        counts[slot] = c;
        dist(dist, slot + 1, left - c);
      }
    };
    distribute(distribute, 0, s.length());
  };
  per_segment(per_segment, 0);
}

}  // namespace

VirtualRep mul(const VirtualRep& x, const VirtualRep& y) {
  require_standard(x, "mul");
  require_standard(y, "mul");
  if (x.side() != y.side()) throw DomainError("mul: factors on different sides");
  VirtualRep out(x.side(), Basis::Standard);
  for (const auto& [kx, cx] : x.terms())
    for (const auto& [ky, cy] : y.terms()) out.add_term(kx.merged(ky), cx * cy);
  return out;
}

TensorRep restrict_esci(const Segment& s, const LeviComposition& c) {
  if (c.total() != s.degree())
    throw DomainError("restrict_esci: composition " + c.str() + " does not sum to the degree " +
                      std::to_string(s.degree()));
  TensorRep out(s.side(), Basis::Standard, c.size());
  std::vector<int> counts;
  for (int b : c.blocks()) {
    if (b % s.unit_degree() != 0) return out;
    counts.push_back(b / s.unit_degree());
  }
  TensorRep::Key key;
  for (const auto& piece : cut(s, counts))
    key.emplace_back(s.side(), std::vector<Segment>{*piece});
  out.add_term(key, 1);
  return out;
}

TensorRep comult_iterated(const VirtualRep& x, std::size_t arity) {
  require_standard(x, "comultiplication");
  if (arity == 0) throw DomainError("comultiplication needs at least one slot");
  TensorRep out(x.side(), Basis::Standard, arity);
  for (const auto& [key, c] : x.terms())
    enumerate_cuts(key, arity, {}, [&](const TensorRep::Key& k) { out.add_term(k, c); });
  return out;
}

TensorRep comult(const VirtualRep& x) { return comult_iterated(x, 2); }

TensorRep jacquet_restrict(const VirtualRep& x, const LeviComposition& levi) {
  require_standard(x, "jacquet_restrict");
  TensorRep out(x.side(), Basis::Standard, levi.size());
  for (const auto& [key, c] : x.terms()) {
    if (key.degree() != levi.total())
      throw DomainError("jacquet_restrict: key degree " + std::to_string(key.degree()) +
                        " does not match composition " + levi.str());
    enumerate_cuts(key, levi.size(), levi.blocks(),
                   [&](const TensorRep::Key& k) { out.add_term(k, c); });
  }
  return out;
}

VirtualRep induce(const TensorRep& t) {
  VirtualRep out(t.side(), t.basis());
  if (t.basis() != Basis::Standard) throw DomainError("induce requires the Standard basis");
  for (const auto& [key, c] : t.terms()) {
    Multisegment prod(t.side());
    for (const auto& ms : key) prod = prod.merged(ms);
    out.add_term(prod, c);
  }
  return out;
}

TensorRep tensor_mul(const TensorRep& x, const TensorRep& y) {
  if (x.arity() != y.arity() || x.side() != y.side() || x.basis() != Basis::Standard ||
      y.basis() != Basis::Standard)
    throw DomainError("tensor_mul: incompatible tensors");
  TensorRep out(x.side(), Basis::Standard, x.arity());
  for (const auto& [kx, cx] : x.terms()) {
    for (const auto& [ky, cy] : y.terms()) {
      TensorRep::Key k;
      k.reserve(kx.size());
      for (std::size_t i = 0; i < kx.size(); ++i) k.push_back(kx[i].merged(ky[i]));
      out.add_term(k, cx * cy);
    }
  }
  return out;
}

TensorRep comult_slot(const TensorRep& t, std::size_t slot) {
  if (slot >= t.arity()) throw DomainError("comult_slot: slot out of range");
  TensorRep out(t.side(), t.basis(), t.arity() + 1);
  for (const auto& [key, c] : t.terms()) {
    const auto split = comult(standard(key[slot]));
    for (const auto& [pair, c2] : split.terms()) {
      TensorRep::Key k;
      for (std::size_t i = 0; i < key.size(); ++i) {
        if (i == slot) {
          k.push_back(pair[0]);
          k.push_back(pair[1]);
        } else {
          k.push_back(key[i]);
        }
      }
      out.add_term(k, c * c2);
    }
  }
  return out;
}

VirtualRep aubert(const VirtualRep& x) {
  require_standard(x, "aubert");
  if (x.is_zero()) return x;
  const auto deg = x.homogeneous_degree();
  if (!deg) throw DomainError("aubert requires a homogeneous element; use aubert_graded");
  if (*deg == 0) return x;
  VirtualRep out(x.side(), Basis::Standard);
  for (const auto& levi : compositions(*deg)) {
    VirtualRep term = induce(jacquet_restrict(x, levi));
    if (levi.size() % 2 == 0) term *= -1;
    out += term;
  }
  return out;
}

VirtualRep aubert_graded(const VirtualRep& x) {
  VirtualRep out(x.side(), x.basis());
  for (const auto& [deg, slice] : x.graded_slices()) out += aubert(slice);
  return out;
}

VirtualRep aubert_by_factors(const VirtualRep& x) {
  require_standard(x, "aubert_by_factors");
  VirtualRep out(x.side(), Basis::Standard);
  std::map<Segment, VirtualRep> cache;
  for (const auto& [key, c] : x.terms()) {
    VirtualRep prod = unit(x.side());
    for (const auto& s : key.segments()) {
      auto it = cache.find(s);
      if (it == cache.end())
        it = cache.emplace(s, aubert(standard(Multisegment(s.side(), {s})))).first;
      prod = mul(prod, it->second);
    }
    if (!key.empty() && key.size() % 2 == 0) prod *= -1;
    out += c * prod;
  }
  return out;
}

bool is_irreducible_standard(const Multisegment& ms) {
  for (std::size_t i = 0; i < ms.size(); ++i)
    for (std::size_t j = i + 1; j < ms.size(); ++j)
      if (linked(ms[i], ms[j])) return false;
  return true;
}

}  // namespace grot
