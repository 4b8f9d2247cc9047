#ifndef CELLMAC_ERRORS_HPP
#define CELLMAC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cellmac {

/// Input does not describe a valid cell complex.
class InvalidComplex : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

class MalformedSpec : public InvalidComplex
{
public:
    using InvalidComplex::InvalidComplex;
};

class NonGraded : public InvalidComplex
{
public:
    using InvalidComplex::InvalidComplex;
};

class IntersectionPropertyViolation : public InvalidComplex
{
public:
    IntersectionPropertyViolation(const std::string& a, const std::string& b)
        : InvalidComplex("cells '" + a + "' and '" + b + "' have no unique maximal common face"),
          first(a), second(b)
    {}
    std::string first, second;
};

class BoundaryNotSphere : public InvalidComplex
{
public:
    using InvalidComplex::InvalidComplex;
};

/// An operation was called on an input outside its domain.
class PreconditionError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

class NotCohenMacaulay : public PreconditionError
{
public:
    using PreconditionError::PreconditionError;
};

class NotGorensteinStar : public PreconditionError
{
public:
    using PreconditionError::PreconditionError;
};

class NonSimplicial : public PreconditionError
{
public:
    using PreconditionError::PreconditionError;
};

/// Multiplication or differential data that fails to commute / square to zero.
class NonCommutingMorphism : public std::logic_error
{
public:
    using std::logic_error::logic_error;
};

} // namespace cellmac

#endif
