#include "tdlc/haar.hpp"

#include "tdlc/error.hpp"

namespace tdlc {

std::string to_string(const HaarValue& h) { return h.coeff.get_str() + "*mu_" + h.base; }

void HaarScale::declare(const std::string& label, const Rational& volume) {
  if (volume <= 0) throw Error(ErrorCode::InvalidInput, "subgroup volume must be positive");
  auto [it, inserted] = volume_.emplace(label, volume);
  if (!inserted && it->second != volume)
    throw Error(ErrorCode::InvalidInput, "conflicting volume for " + label);
}

void HaarScale::declare_subgroup(const std::string& label, const std::string& of, const Rational& index) {
  if (index <= 0) throw Error(ErrorCode::InvalidInput, "index must be positive");
  declare(label, volume(of) / index);
}

void HaarScale::declare_overgroup(const std::string& label, const std::string& sub, const Rational& index) {
  if (index <= 0) throw Error(ErrorCode::InvalidInput, "index must be positive");
  declare(label, volume(sub) * index);
}

const Rational& HaarScale::volume(const std::string& label) const {
  auto it = volume_.find(label);
  if (it == volume_.end()) throw Error(ErrorCode::UnknownIndex, "no index known for subgroup " + label);
  return it->second;
}

HaarValue HaarScale::rebase(const HaarValue& h, const std::string& to) const {
  if (h.base == to) return h;
  return {h.coeff * volume(to) / volume(h.base), to};
}

HaarValue HaarScale::add(const HaarValue& a, const HaarValue& b) const {
  return {a.coeff + rebase(b, a.base).coeff, a.base};
}

}  // namespace tdlc
