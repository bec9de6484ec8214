#include "pdl/basis.hpp"

#include "pdl/errors.hpp"

namespace pdl {

Basis::Basis(std::vector<SiteKind> sites) : sites_(std::move(sites)) {
  dim_ = 1;
  for (SiteKind k : sites_) dim_ *= static_cast<std::size_t>(site_dim(k));
}

Basis Basis::qubits(int n) {
  if (n < 1) throw ValidationError("basis needs at least one site");
  return Basis(std::vector<SiteKind>(static_cast<std::size_t>(n), SiteKind::Qubit));
}

Basis Basis::qutrits(int n) {
  if (n < 1) throw ValidationError("basis needs at least one site");
  return Basis(std::vector<SiteKind>(static_cast<std::size_t>(n), SiteKind::Qutrit));
}

std::size_t Basis::index_of(std::span<const int> digits) const {
  if (digits.size() != sites_.size())
    throw ValidationError("digit count does not match site count");
  std::size_t idx = 0;
  for (std::size_t s = 0; s < sites_.size(); ++s) {
    const int d = site_dim(sites_[s]);
    if (digits[s] < 0 || digits[s] >= d)
      throw ValidationError("digit out of range for site alphabet");
    idx = idx * static_cast<std::size_t>(d) + static_cast<std::size_t>(digits[s]);
  }
  return idx;
}

void Basis::digits_of(std::size_t index, std::span<int> out) const {
  if (index >= dim_) throw ValidationError("basis index out of range");
  if (out.size() != sites_.size())
    throw ValidationError("digit buffer does not match site count");
  for (std::size_t s = sites_.size(); s-- > 0;) {
    const std::size_t d = static_cast<std::size_t>(site_dim(sites_[s]));
    out[s] = static_cast<int>(index % d);
    index /= d;
  }
}

std::vector<int> Basis::digits_of(std::size_t index) const {
  std::vector<int> out(sites_.size());
  digits_of(index, out);
  return out;
}

std::string Basis::label_of(std::size_t index) const {
  static const char* kLetters[3] = {"H", "V", "-"};
  std::string label;
  const std::vector<int> digits = digits_of(index);
  for (int d : digits) label += kLetters[d];
  return label;
}

}  // namespace pdl
