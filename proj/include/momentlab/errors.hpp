#ifndef MOMENTLAB_ERRORS_HPP
#define MOMENTLAB_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace momentlab {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// A tau entry is zero, so the recursive matrix is not defined.
class ZeroTau : public InvalidArgument {
public:
    using InvalidArgument::InvalidArgument;
};

class UnknownName : public InvalidArgument {
public:
    explicit UnknownName(const std::string& name)
        : InvalidArgument("unknown name: " + name), name_(name) {}
    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

class InsufficientData : public Error {
public:
    InsufficientData(std::size_t needed, std::size_t available)
        : Error("insufficient data: need " + std::to_string(needed) +
                " values, have " + std::to_string(available)),
          needed_(needed), available_(available) {}
    std::size_t needed() const noexcept { return needed_; }
    std::size_t available() const noexcept { return available_; }

private:
    std::size_t needed_;
    std::size_t available_;
};

/// Delta_k(y) = 0: the Riesz functional is not quasi-definite, so y is not
/// a Catalan-like sequence.
class QuasiDefiniteFailure : public Error {
public:
    explicit QuasiDefiniteFailure(std::size_t order)
        : Error("Hankel determinant of order " + std::to_string(order) +
                " vanishes"),
          order_(order) {}
    std::size_t order() const noexcept { return order_; }

private:
    std::size_t order_;
};

class NotPositiveCase : public InvalidArgument {
public:
    using InvalidArgument::InvalidArgument;
};

/// x coincides with s_n, so alpha_n(x) has a pole.
class PoleAt : public Error {
public:
    explicit PoleAt(std::size_t index)
        : Error("alpha sequence has a pole: x = s_" + std::to_string(index)),
          index_(index) {}
    std::size_t index() const noexcept { return index_; }

private:
    std::size_t index_;
};

class LengthMismatch : public InvalidArgument {
public:
    using InvalidArgument::InvalidArgument;
};

/// The support theorem does not apply to the given (p,s;q,t).
class HypothesisFailure : public Error {
public:
    explicit HypothesisFailure(std::vector<std::string> failed);
    const std::vector<std::string>& failed() const noexcept { return failed_; }

private:
    std::vector<std::string> failed_;
};

class NonIntegrable : public InvalidArgument {
public:
    using InvalidArgument::InvalidArgument;
};

/// The weight polynomial g is negative somewhere on [a,b].
class GNegative : public Error {
public:
    explicit GNegative(double x)
        : Error("g is negative at x = " + std::to_string(x)), x_(x) {}
    double where() const noexcept { return x_; }

private:
    double x_;
};

class TooShort : public InvalidArgument {
public:
    using InvalidArgument::InvalidArgument;
};

}  // namespace momentlab

#endif
