#include "horo/realform.hpp"

namespace horo {

// Machine-readable form of the classification tables of real forms of the
// simply-connected simple groups and their Tits classes.  One line per
// (family, rank pattern, label family); the `inner` column is the *-action
// (left superscript 1/2 in the usual tables), and the `signs` column encodes
// the Tits class through its evaluation signs on the Gamma-fixed minuscule
// fundamental weights.  Representatives in Z(G) are solved from these signs
// together with the root relations at load time and validated there.
//
// Sign rules:
//   all:+   +1 on every fixed minuscule weight
//   alt     (-1)^k on the k-th fundamental weight (Bourbaki k), i.e. -Id
//   none    no fixed minuscule weight / no constraint (class is trivial)
//   mid     (-1)^((p-q)/2) on the middle weight          [SU(p,q), rank odd]
//   spin    (-1)^s on the spin weight, Spin(n+2s,n+1-2s) [type B]
//   vec:+   +1 on the vector weight
//   vec:-   -1 on the vector weight
//   dvec    vector +1, both half-spins (-1)^((p-q)/4)    [type D inner]
//   dstar   vector -1, half-spins +1 and -1              [Spin*(4m)]
//   m7:+    +1 on the 7th fundamental weight             [type E7]
//   m7:-    -1 on the 7th fundamental weight
const char* const kTitsTablesText =
    "titsclasses v1\n"
    "# family | rank | labels | inner | flags | signs\n"
    "A | n=1     | SL(2,R)    | id   | split   | all:+\n"
    "A | n=1     | SU(2)      | id   | compact | alt\n"
    "A | even    | SL(n+1,R)  | id   | split   | all:+\n"
    "A | even    | SU(p,q)    | flip |         | none\n"
    "A | odd>=3  | SL(n+1,R)  | id   | split   | all:+\n"
    "A | odd>=3  | SL(m,H)    | id   |         | alt\n"
    "A | odd>=3  | SU(p,q)    | flip |         | mid\n"
    "B | n>=2    | Spin(p,q)  | id   |         | spin\n"
    "C | n>=2    | Sp(2n,R)   | id   | split   | vec:+\n"
    "C | n>=2    | Sp(p,q)    | id   |         | vec:-\n"
    "D | n>=4    | Spin(p,q)0 | id   |         | dvec\n"
    "D | n>=4    | Spin(p,q)2 | flip |         | vec:+\n"
    "D | even>=6 | Spin*(2n)  | id   |         | dstar\n"
    "D | odd>=5  | Spin*(2n)  | flip |         | vec:-\n"
    "E | n=6     | E6(6)      | id   | split   | all:+\n"
    "E | n=6     | E6(-26)    | id   |         | all:+\n"
    "E | n=6     | E6(2)      | flip | qs      | none\n"
    "E | n=6     | E6(-14)    | flip |         | none\n"
    "E | n=6     | E6(-78)    | flip | compact | none\n"
    "E | n=7     | E7(7)      | id   | split   | m7:+\n"
    "E | n=7     | E7(-25)    | id   |         | m7:+\n"
    "E | n=7     | E7(-5)     | id   |         | m7:-\n"
    "E | n=7     | E7(-133)   | id   | compact | m7:-\n"
    "E | n=8     | E8(8)      | id   | split   | none\n"
    "E | n=8     | E8(-24)    | id   |         | none\n"
    "E | n=8     | E8(-248)   | id   | compact | none\n"
    "F | n=4     | F4(4)      | id   | split   | none\n"
    "F | n=4     | F4(-20)    | id   |         | none\n"
    "F | n=4     | F4(-52)    | id   | compact | none\n"
    "G | n=2     | G2(2)      | id   | split   | none\n"
    "G | n=2     | G2(-14)    | id   | compact | none\n";

const std::string& tables_text() {
  static const std::string text = kTitsTablesText;
  return text;
}

}  // namespace horo
