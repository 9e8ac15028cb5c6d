// Exhaustive verification suites shared by the CLI `verify` subcommand and
// the acceptance runner.
#pragma once

#include <string>
#include <vector>

namespace qgr {

struct SuiteResult {
    std::string name;
    long checked = 0;
    long failed = 0;
    std::vector<std::string> failures;  // capped diagnostics

    [[nodiscard]] bool ok() const { return failed == 0; }
    void check(bool condition, const std::string& what);
    [[nodiscard]] std::string summary() const;
};

// LGV identity (pseudo minor = signed sum over vertex-disjoint systems)
// plus the column-form identity, over every Le
// diagram on every partition inside box_rows x box_cols and every (I,J)
// with |I| = |J| <= max_size.
SuiteResult verify_lgv(int box_rows, int box_cols, int max_size = 3);

// Vanishing: minor_vanishes vs flow existence vs backtracking
// enumeration, same scope as verify_lgv.
SuiteResult verify_vanishing(int box_rows, int box_cols, int max_size = 3);

// Restoration: restore_entries == path_matrix.
SuiteResult verify_restore(int box_rows, int box_cols);

// All five Laplace modes equal the defining sum for index pairs of size
// <= max_size on every shape inside the box; includes the known
// negative case (the first-row-right variant must fail on lambda = (2,1)).
SuiteResult verify_laplace(int box_rows, int box_cols, int max_size = 3);

// Leading monomials of quantum minors in the full box_rows x box_cols
// algebra (diagonal monomial, coefficient 1).
SuiteResult verify_leading(int box_rows, int box_cols, int max_size = 3);

// Generalised quantum Pluecker relations expand to zero, in both
// conventions; exhaustive when the instance count is small, otherwise a
// deterministic sample.
SuiteResult verify_plucker(int m, int n);

// Ore identity for every strictly-NW pair in the grid and
// d = 0..d_max.
SuiteResult verify_ore(int grid_rows, int grid_cols, int d_max = 5);

// Every positroid passes the matroid exchange axiom.
SuiteResult verify_matroid(int m, int n);

// Necklace axiom, the reconstruction of the Pluecker set from the
// necklace, and the separating property at the Pluecker-set level, for
// every H-prime of Gr(m,n).
SuiteResult verify_necklace(int m, int n);

// Necklace order == Pluecker set inclusion on all ordered pairs;
// poset built from necklaces equals the poset built from inclusion; unique
// bottom is the zero ideal; distinct keys give distinct Pluecker sets.
SuiteResult verify_poset(int m, int n);

// Row/column labelling vs boundary-step labelling consistency for every
// key and alpha.
SuiteResult verify_labeling(int m, int n);

}  // namespace qgr
