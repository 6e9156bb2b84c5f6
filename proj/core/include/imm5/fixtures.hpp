#pragma once

// Standard surgery presentations shipped with the library.

#include "imm5/surgery.hpp"

namespace imm5::fixtures {

/// Empty link.
SurgeryPresentation s3();
/// 0-framed unknot.
SurgeryPresentation s1_x_s2();
/// 2-framed unknot.
SurgeryPresentation rp3();
/// 4-framed unknot, the lens space L(4,1).
SurgeryPresentation lens4();
/// 0-surgery on the Borromean rings: the 3x3 zero matrix.
SurgeryPresentation t3();
/// Positive definite even unimodular form of rank 8 (E8 Cartan matrix).
IntSymMatrix e8_form();

}  // namespace imm5::fixtures
