#pragma once

// Worked-example complexes over the ring k[x,y] with f = (x^2, y^2),
// w = x^2*x1 + y^2*x2. Fixture variables are matched by position: the two
// y-variables play x and y, the two x-variables play x1 and x2.

#include <string>
#include <vector>

#include "ghrv/complex.hpp"

namespace ghrv {

RingPtr example_ring(FieldPtr field);

// Throws Precondition unless ring has d = 2, c = 2 and f = (y1^2, y2^2).
void require_example_ring(const RingSpec& ring);

// 2x2 complete resolution of k: A = [[-y, x*x1], [x, y*x2]],
// B = [[-y*x2, x*x1], [x, y]].
PeriodicComplex fixture_k(const RingPtr& ring);
// K^{x1*x2}, the 4x4 cone of multiplication by x1*x2 on fixture_k.
PeriodicComplex fixture_k_cone(const RingPtr& ring);
// Resolution of Q[x1,x2]/(f1,f2): A = [[x1, -y^2], [x2, x^2]],
// B = [[x^2, y^2], [-x2, x1]].
PeriodicComplex fixture_ci(const RingPtr& ring);
// (1, w): contractible, any ring.
PeriodicComplex fixture_trivial(const RingPtr& ring);

// Literal D and D' matrices of the 4x4 cone, for comparisons.
PolyMatrix literal_cone_d(const RingSpec& ring);
PolyMatrix literal_cone_d_prime(const RingSpec& ring);

// Names accepted by fixture(): k5, k5-example, s3-example, trivial.
std::vector<std::string> fixture_names();
PeriodicComplex fixture(const RingPtr& ring, const std::string& name);

}  // namespace ghrv
