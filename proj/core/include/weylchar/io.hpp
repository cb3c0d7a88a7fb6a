#ifndef WEYLCHAR_IO_HPP
#define WEYLCHAR_IO_HPP

#include <variant>

#include <json.hpp>

#include "weylchar/morphism.hpp"
#include "weylchar/parse.hpp"

namespace weylchar {

using AnyEndomorphism = std::variant<WeylEndomorphism, PoissonEndomorphism>;

/// Wire format: {"kind": "weyl"|"poisson", "n": int, "p": int,
///               "u": [canonical text...], "v": [canonical text...]}.
nlohmann::json endomorphism_to_json(const AnyEndomorphism& phi);
AnyEndomorphism endomorphism_from_json(const nlohmann::json& j);

AlgebraLaw algebra_from_name(const std::string& name);
std::string algebra_name(AlgebraLaw law);

}  // namespace weylchar

#endif  // WEYLCHAR_IO_HPP
