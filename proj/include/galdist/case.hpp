#ifndef GALDIST_CASE_HPP
#define GALDIST_CASE_HPP

#include <string>

namespace galdist {

enum class Case { Symplectic, Orthogonal, Unitary };

inline int epsilon(Case c) { return c == Case::Symplectic ? -1 : 1; }

std::string case_name(Case c);
Case parse_case(const std::string& name);

}  // namespace galdist

#endif
