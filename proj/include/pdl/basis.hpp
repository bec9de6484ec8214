#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace pdl {

// Per-site alphabets: channel inputs are polarization qubits {H, V},
// channel outputs gain a vacuum level {H, V, vac}.
enum class SiteKind : std::uint8_t { Qubit = 2, Qutrit = 3 };

inline int site_dim(SiteKind k) { return static_cast<int>(k); }

// Labeled mixed-radix tensor-product basis, site 0 most significant.
// A default-constructed basis has zero sites and dimension 1 (the scalar
// left over after tracing out every site).
class Basis {
public:
  Basis() = default;
  explicit Basis(std::vector<SiteKind> sites);

  static Basis qubits(int n);
  static Basis qutrits(int n);

  int site_count() const { return static_cast<int>(sites_.size()); }
  SiteKind site(int s) const { return sites_[static_cast<std::size_t>(s)]; }
  std::size_t dim() const { return dim_; }

  std::size_t index_of(std::span<const int> digits) const;
  void digits_of(std::size_t index, std::span<int> out) const;
  std::vector<int> digits_of(std::size_t index) const;

  // "H", "V" per site; the vacuum level prints as "-" (no photon).
  std::string label_of(std::size_t index) const;

  bool operator==(const Basis&) const = default;

private:
  std::vector<SiteKind> sites_;
  std::size_t dim_ = 1;
};

}  // namespace pdl
