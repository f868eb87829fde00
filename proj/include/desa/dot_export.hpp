#pragma once

#include <string>

#include "desa/attack_synthesis.hpp"

namespace desa {

std::string to_dot(const AnnotatedSupervisor& sa);
std::string to_dot(const GeneralizedProduct& gp);
std::string to_dot(const MooreAttacker& m);

}  // namespace desa
