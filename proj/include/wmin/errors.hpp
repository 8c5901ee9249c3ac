#pragma once

#include <stdexcept>
#include <string>

namespace wmin {

/* Every failure surfaced by the kernel is one of these named conditions.
   The CLI maps the name into its JSON error object, so names are part of
   the output contract and must stay stable. */
class error : public std::runtime_error {
public:
    error(std::string name, const std::string& what)
        : std::runtime_error(what), name_(std::move(name)) {}
    const std::string& name() const { return name_; }

private:
    std::string name_;
};

#define WMIN_DEFINE_ERROR(Name)                                   \
    class Name : public error {                                   \
    public:                                                       \
        explicit Name(const std::string& what) : error(#Name, what) {} \
    }

WMIN_DEFINE_ERROR(DivisionByZero);
WMIN_DEFINE_ERROR(ZeroPolynomial);
WMIN_DEFINE_ERROR(ParseError);
WMIN_DEFINE_ERROR(UnsupportedParameter);
WMIN_DEFINE_ERROR(UnsupportedFamily);
WMIN_DEFINE_ERROR(ConsistencyFailure);
WMIN_DEFINE_ERROR(ConstructionFailure);
WMIN_DEFINE_ERROR(NormalizationFailure);
WMIN_DEFINE_ERROR(NotARoot);
WMIN_DEFINE_ERROR(BadLambda);
WMIN_DEFINE_ERROR(CompactnessFailure);
WMIN_DEFINE_ERROR(WrongGrade);
WMIN_DEFINE_ERROR(WrongSubspace);
WMIN_DEFINE_ERROR(IdentityFailure);
WMIN_DEFINE_ERROR(PositivityFailure);
WMIN_DEFINE_ERROR(NotTypeI);
WMIN_DEFINE_ERROR(NotInvolution);
WMIN_DEFINE_ERROR(DegenerateParameter);
WMIN_DEFINE_ERROR(AbelianGNatural);
WMIN_DEFINE_ERROR(PoleAtLevel);
WMIN_DEFINE_ERROR(SelfPartner);
WMIN_DEFINE_ERROR(ZeroProduct);
WMIN_DEFINE_ERROR(EmptySet);
WMIN_DEFINE_ERROR(BadParameter);
WMIN_DEFINE_ERROR(UsageError);
WMIN_DEFINE_ERROR(InternalError);

#undef WMIN_DEFINE_ERROR

}  // namespace wmin
