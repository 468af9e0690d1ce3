#ifndef ANYON_ERRORS_HPP
#define ANYON_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace anyon {

/// No classically allowed annulus exists at the requested energy.
class NoBoundState : public std::runtime_error {
public:
    enum class Reason {
        below_minimum,  ///< energy below the floor of the effective potential
        unbound         ///< no outer turning point (level not confined)
    };

    NoBoundState(Reason reason, const std::string& msg)
        : std::runtime_error(msg), reason_(reason) {}

    Reason reason() const { return reason_; }

private:
    Reason reason_;
};

/// A numerical procedure (quadrature, bracketing, iteration) failed to
/// converge. Carries the best estimate reached, when one exists.
class NumericalError : public std::runtime_error {
public:
    explicit NumericalError(const std::string& msg)
        : std::runtime_error(msg) {}
    NumericalError(const std::string& msg, double estimate)
        : std::runtime_error(msg), estimate_(estimate), has_estimate_(true) {}

    bool has_estimate() const { return has_estimate_; }
    double estimate() const { return estimate_; }

private:
    double estimate_ = 0.0;
    bool has_estimate_ = false;
};

/// The algebraic spectral equation has no real negative root on the branch
/// connected to the zero-field limit (field too strong for the expansion).
class NoPhysicalRoot : public std::runtime_error {
public:
    explicit NoPhysicalRoot(const std::string& msg)
        : std::runtime_error(msg) {}
};

/// Grid refinement changed a finite-difference eigenvalue by more than the
/// requested tolerance.
class UnconvergedLevel : public std::runtime_error {
public:
    explicit UnconvergedLevel(const std::string& msg)
        : std::runtime_error(msg) {}
};

/// The requested eigenstate is not confined inside the truncation radius.
class TruncationError : public std::runtime_error {
public:
    explicit TruncationError(const std::string& msg)
        : std::runtime_error(msg) {}
};

}  // namespace anyon

#endif
