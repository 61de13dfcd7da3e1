#pragma once

#include <jacder/centralizer.hpp>
#include <jacder/derivation.hpp>
#include <jacder/eigen.hpp>
#include <jacder/kernel.hpp>
#include <jacder/ode.hpp>
#include <jacder/univar_poly.hpp>

#include <json.hpp>

#include <string>

namespace jacder::cli {

// Text forms use the input grammar so parse_poly(to_text(p)) == p. Terms are
// written from the graded-lex leading term down; zero is "0".
std::string to_text(const BivarPoly& p);
std::string to_text(const UnivarPoly& p);  // variable t
std::string to_text(const Rational& r);

nlohmann::ordered_json to_json(const Derivation& d);
nlohmann::ordered_json to_json(const Decomposition& d);
nlohmann::ordered_json to_json(const CriterionReport& r);
nlohmann::ordered_json to_json(const CentralizerResult& r);
nlohmann::ordered_json to_json(const BasisCoordinates& b);
nlohmann::ordered_json to_json(const EigenPair& e);
nlohmann::ordered_json to_json(const OdeSystem& s);

}  // namespace jacder::cli
