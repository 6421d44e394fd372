#pragma once

#include <optional>
#include <string>

#include "hydra/twisted.hpp"

namespace hydra {

enum class CertMethod { UnequalSExp, Zero, IConfig, HConfig, Hnn };
std::string to_string(CertMethod m);

struct Certificate {
  bool conjugate = false;
  std::optional<HWord> witness;      // compressed
  std::optional<HWord> raw_witness;  // before compression
  CertMethod method = CertMethod::Zero;
  bool inconclusive = false;
  bool verified = false;
  std::string note;  // why a run was inconclusive, when it was
};

// Decides whether u and v are conjugate in H_m. m = 0 uses the larger rank of the inputs;
// a smaller m than the inputs need is raised to it.
Certificate decide_conjugacy(std::span<const Letter> u, std::span<const Letter> v, const BoundPolicy& policy = {},
                             int m = 0);

}  // namespace hydra
