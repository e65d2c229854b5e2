#include "polyratio/config.hpp"

#include <cstdlib>
#include <string>

#include "polyratio/errors.hpp"

namespace polyratio {

namespace {
double g_tolerance = 1e-9;
}

double predicate_tolerance() { return g_tolerance; }

void set_predicate_tolerance(double tol)
{
    if (!(tol > 0.0) || !(tol < 1.0))
        raise(ErrorKind::InvalidArgument, "predicate tolerance must be in (0, 1)");
    g_tolerance = tol;
}

void init_tolerance_from_env()
{
    const char* value = std::getenv("POLYRATIO_TOL");
    if (value == nullptr || *value == '\0')
        return;
    char* end = nullptr;
    double tol = std::strtod(value, &end);
    if (end == value)
        raise(ErrorKind::InvalidArgument, std::string("POLYRATIO_TOL is not a number: ") + value);
    set_predicate_tolerance(tol);
}

} // namespace polyratio
