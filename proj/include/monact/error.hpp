// monact - finite monoids, right acts, and their covers
//
// Exception type shared by every module.

#ifndef MONACT_ERROR_HPP_
#define MONACT_ERROR_HPP_

#include <cstddef>    // for size_t
#include <stdexcept>  // for runtime_error
#include <string>     // for string
#include <utility>    // for move
#include <vector>     // for vector

namespace monact {

  //! Error categories raised by the library.
  enum class errc {
    bad_shape,
    bad_index,
    duplicate_label,
    no_identity,
    not_associative,
    not_act,
    not_s_map,
    monoid_mismatch,
    empty_semigroup,
    bad_parameter,
    order_too_large,
    enumeration_limit,
    empty_seed,
    not_congruence,
    not_epimorphism,
    budget_exceeded,
    monoid_too_large,
    not_subset,
    already_member,
    not_directed,
    not_partial_order,
    missing_arrow,
    incoherent_arrows,
    too_few_samples,
    parse_error
  };

  inline char const* to_string(errc e) noexcept {
    switch (e) {
      case errc::bad_shape: return "BadShape";
      case errc::bad_index: return "BadIndex";
      case errc::duplicate_label: return "DuplicateLabel";
      case errc::no_identity: return "NoIdentity";
      case errc::not_associative: return "NotAssociative";
      case errc::not_act: return "NotAct";
      case errc::not_s_map: return "NotSMap";
      case errc::monoid_mismatch: return "MonoidMismatch";
      case errc::empty_semigroup: return "EmptySemigroup";
      case errc::bad_parameter: return "BadParameter";
      case errc::order_too_large: return "OrderTooLarge";
      case errc::enumeration_limit: return "EnumerationLimit";
      case errc::empty_seed: return "EmptySeed";
      case errc::not_congruence: return "NotCongruence";
      case errc::not_epimorphism: return "NotEpimorphism";
      case errc::budget_exceeded: return "BudgetExceeded";
      case errc::monoid_too_large: return "MonoidTooLarge";
      case errc::not_subset: return "NotSubset";
      case errc::already_member: return "AlreadyMember";
      case errc::not_directed: return "NotDirected";
      case errc::not_partial_order: return "NotPartialOrder";
      case errc::missing_arrow: return "MissingArrow";
      case errc::incoherent_arrows: return "IncoherentArrows";
      case errc::too_few_samples: return "TooFewSamples";
      case errc::parse_error: return "ParseError";
    }
    return "Unknown";
  }

  //! Exception carrying an error category and, where one exists, the
  //! indices that witness the failure (e.g. the triple (a, b, c) at which
  //! associativity fails).
  class Error : public std::runtime_error {
   public:
    Error(errc code, std::string const& what, std::vector<std::size_t> witness = {})
        : std::runtime_error(std::string(to_string(code)) + ": " + what),
          _code(code),
          _witness(std::move(witness)) {}

    errc code() const noexcept {
      return _code;
    }

    std::vector<std::size_t> const& witness() const noexcept {
      return _witness;
    }

   private:
    errc                     _code;
    std::vector<std::size_t> _witness;
  };

}  // namespace monact

#endif  // MONACT_ERROR_HPP_
