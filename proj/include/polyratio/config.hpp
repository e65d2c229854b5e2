#pragma once

namespace polyratio {

/// Absolute tolerance used by all float-backend predicates (cross-product
/// signs and point coincidence). Default 1e-9. Set once at startup; the
/// library only reads it afterwards.
double predicate_tolerance();
void set_predicate_tolerance(double tol);

/// Applies POLYRATIO_TOL from the environment when present.
void init_tolerance_from_env();

/// Execution policy for the data-parallel kernels. Serial is the reference
/// implementation; Parallel runs the same kernel under OpenMP and must
/// produce bit-identical results.
enum class Exec { Serial, Parallel };

} // namespace polyratio
