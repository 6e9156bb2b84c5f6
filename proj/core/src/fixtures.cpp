#include "imm5/fixtures.hpp"

namespace imm5::fixtures {

SurgeryPresentation s3() { return {"S3", IntSymMatrix{}}; }

SurgeryPresentation s1_x_s2() { return {"S1xS2", IntSymMatrix{{0}}}; }

SurgeryPresentation rp3() { return {"RP3", IntSymMatrix{{2}}}; }

SurgeryPresentation lens4() { return {"L(4,1)", IntSymMatrix{{4}}}; }

SurgeryPresentation t3() { return {"T3", IntSymMatrix::zero(3)}; }

IntSymMatrix e8_form() {
  // Dynkin diagram: chain 0-1-2-3-4-5-6 with node 7 attached to node 4.
  IntMatrix m(8, 8);
  for (std::size_t i = 0; i < 8; ++i) m(i, i) = 2;
  auto edge = [&](std::size_t a, std::size_t b) { m(a, b) = m(b, a) = -1; };
  for (std::size_t i = 0; i + 1 < 7; ++i) edge(i, i + 1);
  edge(4, 7);
  return IntSymMatrix(std::move(m));
}

}  // namespace imm5::fixtures
