#pragma once

#include <string>

#include "secdom/family.hpp"

namespace secdom {

struct FormulaResult {
    Family family;
    int n;
    int value;
    std::string case_label; // which branch fired; fixed strings for golden output
};

/// Closed-form gamma_s for the instance:
///   p2xpn: ceil((3n+1)/4)                        (n >= 2)
///   p2xcn: 3n/4 if n = 0 mod 8, else the p2xpn value   (n >= 3)
///   m2n:   3n/4 if n = 4 mod 8, else the p2xpn value   (n >= 3)
///   p3xpn: n+1 if n <= 8 or n = 10, else n+2     (n >= 2)
///   p3xcn: n+1 if n in {4, 7}, else 3*ceil(n/3)  (n >= 3)
FormulaResult gamma_s_formula(const FamilyInstance& inst);

/// floor((n+7)/8) + floor((n+4)/8) + floor((n+2)/4) + floor((n+1)/4), n >= 3.
/// Equals gamma_s_formula(p2xcn, n) for every n. The same expression with
/// ceilings instead of floors does not: it evaluates to 10 at n = 8 where the
/// cycle value is 6. Only the floor reading is implemented.
int winter_formula(int n);

/// The pattern-construction upper bounds:
///   p2xpn: ceil((3n+1)/4); p3xpn: n+2; p3xcn: 3*ceil(n/3);
///   p2xcn: 3n/4, defined only for n = 0 mod 8;
///   m2n:   3n/4, defined only for n = 4 mod 8.
/// Throws NotApplicableError when the residue gate fails.
int upper_bound_formula(const FamilyInstance& inst);

} // namespace secdom
