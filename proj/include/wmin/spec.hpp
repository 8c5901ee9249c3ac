#pragma once

#include <string>

#include "wmin/rational.hpp"

namespace wmin {

/*
 * The catalog of algebras handled by this project:
 *   sl(2|m) m >= 3, psl(2|2), spo(2|m) m >= 0, osp(4|m) m > 2 even,
 *   the one-parameter family D(2,1;a) with a not in {0,-1}, F(4), G(3).
 */
enum class Family { SL2m, PSL22, SPO2m, OSP4m, D21a, F4, G3 };

struct AlgebraSpec {
    Family family = Family::F4;
    int m = 0;    /* SL2m, SPO2m, OSP4m */
    Rational a;   /* D21a */

    std::string name() const;
};

/*
 * Grammar: "sl(2|m)" | "psl(2|2)" | "spo(2|m)" | "osp(4|m)" |
 *          "D(2,1;a=<rational>)" | "F(4)" | "G(3)".
 * Throws ParseError on syntax errors and UnsupportedParameter when the
 * parameter falls outside the simple range (sl(2|m) needs m >= 3,
 * osp(4|m) needs even m > 2, D(2,1;a) needs a outside {0,-1}).
 */
AlgebraSpec parse_spec(const std::string& text);

}  // namespace wmin
