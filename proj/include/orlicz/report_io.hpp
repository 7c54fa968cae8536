#pragma once

#include <ostream>
#include <string>

#include <json.hpp>

#include "orlicz/solver.hpp"

namespace orlicz {

using Json = nlohmann::ordered_json;

/// Mesh descriptor followed by nodal values.
Json to_json(const DiscreteFunction& u);
Json to_json(const Delta2Report& d);
Json to_json(const IndexReport& r, bool with_grid = false);
Json to_json(const HypothesisReport& r);
Json to_json(const GeometryReport& g);
Json to_json(const DomDiagnostics& d);
Json to_json(const SolverReport& r);

/// "x,value" in 1D, "x,y,value" in 2D; one row per node.
void write_profile_csv(std::ostream& os, const DiscreteFunction& u);

std::string summary_header();
std::string summary_row(const SolverReport& r);
/// Row for a lambda whose solve raised; numeric columns are nan.
std::string summary_error_row(double lambda, double lambda_star, const std::string& outcome);

}  // namespace orlicz
