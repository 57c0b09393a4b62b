#ifndef GALDIST_RATMATRIX_HPP
#define GALDIST_RATMATRIX_HPP

#include "galdist/rational.hpp"

#include <vector>

namespace galdist {

using RatMatrix = std::vector<std::vector<Q>>;

RatMatrix identity_matrix(std::size_t n);
RatMatrix diagonal_matrix(const std::vector<Q>& d);
RatMatrix transpose(const RatMatrix& m);
RatMatrix multiply(const RatMatrix& a, const RatMatrix& b);
RatMatrix inverse(const RatMatrix& m);  // throws DomainError when singular
Q determinant(const RatMatrix& m);
bool is_square_matrix(const RatMatrix& m);
bool is_symmetric(const RatMatrix& m);

// {}^t p g p
RatMatrix congruence(const RatMatrix& g, const RatMatrix& p);

}  // namespace galdist

#endif
