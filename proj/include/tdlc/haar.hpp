#pragma once

#include <map>
#include <string>

#include "tdlc/ratlin.hpp"

namespace tdlc {

/// coeff * mu_base, where mu_base is the Haar measure giving the compact
/// open subgroup `base` volume 1.
struct HaarValue {
  Rational coeff;
  std::string base;

  friend bool operator==(const HaarValue&, const HaarValue&) = default;
};

std::string to_string(const HaarValue& h);

/// Volumes of labelled compact open subgroups under one reference measure.
/// mu_L = mu_ref / vol(L), so c * mu_L = c * vol(M) / vol(L) * mu_M.
class HaarScale {
 public:
  /// The first declared label becomes the reference (volume 1) unless a
  /// volume is given.
  void declare(const std::string& label, const Rational& volume = 1);
  /// label is a subgroup of `of` with |of : label| = index.
  void declare_subgroup(const std::string& label, const std::string& of, const Rational& index);
  /// label contains `sub` with |label : sub| = index.
  void declare_overgroup(const std::string& label, const std::string& sub, const Rational& index);

  bool knows(const std::string& label) const { return volume_.count(label) > 0; }
  /// Throws UnknownIndex.
  const Rational& volume(const std::string& label) const;

  HaarValue rebase(const HaarValue& h, const std::string& to) const;
  /// Sum expressed over a's base.
  HaarValue add(const HaarValue& a, const HaarValue& b) const;

 private:
  std::map<std::string, Rational> volume_;
};

}  // namespace tdlc
