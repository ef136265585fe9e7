#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <type_traits>

#include <boost/multiprecision/cpp_int.hpp>
#include <Eigen/Core>

// Boost.Multiprecision probes every constructor argument for a byte-container
// interface; Eigen 3.4 dense types expose a `const_iterator` of type void,
// which breaks that probe. Opt the Eigen types we use out explicitly.
namespace boost::multiprecision::detail {
template <class S, int R, int C, int O, int MR, int MC>
struct is_byte_container<Eigen::Matrix<S, R, C, O, MR, MC>> : std::false_type {};
template <class D>
struct is_byte_container<Eigen::MatrixBase<D>> : std::false_type {};
template <class D>
struct is_byte_container<Eigen::DenseBase<D>> : std::false_type {};
template <class L, class R, int O>
struct is_byte_container<Eigen::Product<L, R, O>> : std::false_type {};
template <class F, class M>
struct is_byte_container<Eigen::CwiseNullaryOp<F, M>> : std::false_type {};
template <class F, class M>
struct is_byte_container<Eigen::CwiseUnaryOp<F, M>> : std::false_type {};
template <class F, class L, class R>
struct is_byte_container<Eigen::CwiseBinaryOp<F, L, R>> : std::false_type {};
template <class X, int R, int C, bool I>
struct is_byte_container<Eigen::Block<X, R, C, I>> : std::false_type {};
template <class M>
struct is_byte_container<Eigen::Transpose<M>> : std::false_type {};
}  // namespace boost::multiprecision::detail

namespace invariatus {

/// Machine integer used for residues, orders and group-sized quantities.
using Integer = std::int64_t;

/// Arbitrary-precision integer for general integer-matrix work.
using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                             boost::multiprecision::et_off>;

/// Upper bound on the number of cyclic factors of any group we handle.
inline constexpr int kMaxRank = 16;

/// Group elements are row vectors of residues; capacity is fixed so that
/// element arithmetic never touches the heap.
using Element = Eigen::Matrix<Integer, 1, Eigen::Dynamic, Eigen::RowMajor, 1, kMaxRank>;

/// Small integer matrices (subgroup lattices, coordinate changes).
using SmallMatrix = Eigen::Matrix<Integer, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor,
                                  kMaxRank + 1, kMaxRank + 1>;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

/// Unbounded integer matrix.
using IntMatrix = Matrix<BigInt>;

/// p-height of the zero element.
inline constexpr int kInfiniteHeight = std::numeric_limits<int>::max();

/// Malformed or inconsistent input (bad factor, foreign element, ...).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An enumeration would exceed its configured budget.
class ResourceLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace invariatus

namespace Eigen {
template <>
struct NumTraits<invariatus::BigInt> : GenericNumTraits<invariatus::BigInt> {
  using Real = invariatus::BigInt;
  using NonInteger = invariatus::BigInt;
  using Literal = invariatus::BigInt;
  using Nested = invariatus::BigInt;
  enum {
    IsInteger = 1,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 8,
    MulCost = 16
  };
  static inline int digits10() { return 0; }
};
}  // namespace Eigen
