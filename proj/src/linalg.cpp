#include "gammaop/linalg.hpp"

template class Eigen::BDCSVD<Eigen::MatrixXcd>;
template class Eigen::BDCSVD<Eigen::MatrixXd>;
template class Eigen::JacobiSVD<Eigen::MatrixXcd>;
template class Eigen::JacobiSVD<Eigen::MatrixXd>;
template class Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd>;
template class Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>;
template class Eigen::ComplexEigenSolver<Eigen::MatrixXcd>;
template class Eigen::FullPivLU<Eigen::MatrixXcd>;
template class Eigen::FullPivLU<Eigen::MatrixXd>;
template class Eigen::PartialPivLU<Eigen::MatrixXcd>;
template class Eigen::HouseholderQR<Eigen::MatrixXcd>;
template class Eigen::LLT<Eigen::MatrixXcd>;
