#include "weylchar/io.hpp"

namespace weylchar {

std::string algebra_name(AlgebraLaw law) {
  return law == AlgebraLaw::weyl ? "weyl" : "poisson";
}

AlgebraLaw algebra_from_name(const std::string& name) {
  if (name == "weyl") return AlgebraLaw::weyl;
  if (name == "poisson") return AlgebraLaw::poisson;
  throw UsageError("unknown algebra kind '" + name +
                   "' (expected weyl or poisson)");
}

namespace {

template <class Elem>
nlohmann::json to_json_impl(const Endomorphism<Elem>& phi) {
  nlohmann::json j;
  j["kind"] = algebra_name(Elem::law);
  j["n"] = phi.sig.n;
  j["p"] = phi.sig.p.value();
  j["u"] = nlohmann::json::array();
  j["v"] = nlohmann::json::array();
  for (const auto& e : phi.u) j["u"].push_back(to_string(e));
  for (const auto& e : phi.v) j["v"].push_back(to_string(e));
  return j;
}

template <AlgebraLaw Law>
Element<Law> eval_as(const Expression& e, const Context& ctx) {
  if constexpr (Law == AlgebraLaw::weyl) {
    return eval_weyl(e, ctx);
  } else {
    return eval_poly(e, ctx);
  }
}

template <AlgebraLaw Law>
Endomorphism<Element<Law>> from_json_impl(const nlohmann::json& j,
                                          const Context& ctx) {
  std::vector<Element<Law>> u, v;
  for (const auto& s : j.at("u")) {
    u.push_back(eval_as<Law>(parse_expression(s.get<std::string>(), ctx), ctx));
  }
  for (const auto& s : j.at("v")) {
    v.push_back(eval_as<Law>(parse_expression(s.get<std::string>(), ctx), ctx));
  }
  return Endomorphism<Element<Law>>(ctx.signature(), std::move(u),
                                    std::move(v));
}

}  // namespace

nlohmann::json endomorphism_to_json(const AnyEndomorphism& phi) {
  return std::visit([](const auto& e) { return to_json_impl(e); }, phi);
}

AnyEndomorphism endomorphism_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw UsageError("endomorphism JSON must be an object");
  const AlgebraLaw law = algebra_from_name(j.at("kind").get<std::string>());
  const Context ctx{law, j.at("n").get<int>(),
                    Prime(j.at("p").get<std::uint64_t>())};
  if (law == AlgebraLaw::weyl) {
    return from_json_impl<AlgebraLaw::weyl>(j, ctx);
  }
  return from_json_impl<AlgebraLaw::poisson>(j, ctx);
}

}  // namespace weylchar
