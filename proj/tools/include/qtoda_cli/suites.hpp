#pragma once

#include "qtoda_cli/report.hpp"

namespace qtoda::cli {

VerificationReport suite_commute(int N, bool affine);
VerificationReport suite_serre(int N, bool affine);
VerificationReport suite_closed_forms(int N);
VerificationReport suite_quasiclassical(int N);
VerificationReport suite_automorphism(int N);
VerificationReport suite_relativistic(int N);
VerificationReport suite_macdonald_limit(int N);
VerificationReport suite_cm_limit(int N, bool elliptic);
/// Every suite for N = 2..max_n.
VerificationReport suite_all(int max_n);

}  // namespace qtoda::cli
