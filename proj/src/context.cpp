#include "grot/context.hpp"

#include <algorithm>

#include "grot/error.hpp"

namespace grot {

AlgebraContext::AlgebraContext(int d, std::vector<CuspidalFamily> families)
    : d_(d), families_(std::move(families)) {
  if (d_ < 1) throw ContextError("d must be a positive integer, got " + std::to_string(d_));
  std::sort(families_.begin(), families_.end(),
            [](const CuspidalFamily& x, const CuspidalFamily& y) { return x.name < y.name; });
  for (std::size_t i = 0; i < families_.size(); ++i) {
    const auto& f = families_[i];
    if (f.name.empty()) throw ContextError("family name must not be empty");
    if (i > 0 && families_[i - 1].name == f.name)
      throw ContextError("duplicate family name '" + f.name + "'");
    if (f.p < 1) throw ContextError("family '" + f.name + "': p must be positive");
    if (f.s) {
      if (*f.s < 1) throw ContextError("family '" + f.name + "': s must be positive");
      if ((f.p * *f.s) % d_ != 0)
        throw ContextError("family '" + f.name + "': d=" + std::to_string(d_) +
                           " does not divide p*s=" + std::to_string(f.p * *f.s));
    }
  }
}

const CuspidalFamily& AlgebraContext::family(int id) const {
  if (id < 0 || static_cast<std::size_t>(id) >= families_.size())
    throw ContextError("family id out of range");
  return families_[static_cast<std::size_t>(id)];
}

std::optional<int> AlgebraContext::find_family(std::string_view name) const {
  auto it = std::lower_bound(families_.begin(), families_.end(), name,
                             [](const CuspidalFamily& f, std::string_view n) { return f.name < n; });
  if (it == families_.end() || it->name != name) return std::nullopt;
  return static_cast<int>(it - families_.begin());
}

int AlgebraContext::family_id(std::string_view name) const {
  if (auto id = find_family(name)) return *id;
  throw ContextError("unknown family '" + std::string(name) + "'");
}

int AlgebraContext::d_unit_degree(int id) const {
  const auto& f = family(id);
  if (!f.s) throw ContextError("family '" + f.name + "' has no inner-form attachment");
  return f.p * *f.s / d_;
}

}  // namespace grot
