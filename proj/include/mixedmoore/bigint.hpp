#pragma once

// Arbitrary-precision integer scalar usable inside Eigen dense types.

#include <type_traits>

#include <Eigen/Core>
#include <boost/multiprecision/traits/is_byte_container.hpp>

// Eigen 3.4 dense expressions expose const_iterator, which makes older
// Boost.Multiprecision treat them as byte containers during overload
// resolution and fail to compile. No Eigen type is a byte container.
namespace boost::multiprecision::detail {
template <class C>
  requires std::is_base_of_v<Eigen::EigenBase<C>, C>
struct is_byte_container<C> : public boost::false_type {};
}  // namespace boost::multiprecision::detail

#include <boost/multiprecision/cpp_int.hpp>

namespace mixedmoore {

using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                             boost::multiprecision::et_off>;

}  // namespace mixedmoore

namespace Eigen {

template <>
struct NumTraits<mixedmoore::BigInt> : GenericNumTraits<mixedmoore::BigInt> {
  using Real = mixedmoore::BigInt;
  using NonInteger = mixedmoore::BigInt;
  using Literal = mixedmoore::BigInt;
  using Nested = mixedmoore::BigInt;
  enum {
    IsInteger = 1,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 8,
    MulCost = 16
  };
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
