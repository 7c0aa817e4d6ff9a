#include "ramanqed/operators.hpp"

#include <cmath>
#include <stdexcept>

#include <unsupported/Eigen/KroneckerProduct>

namespace ramanqed {

Operator annihilation(int n_fock) {
    if (n_fock < 2)
        throw std::invalid_argument("annihilation: n_fock must be >= 2");
    Operator a = Operator::Zero(n_fock, n_fock);
    for (int k = 1; k < n_fock; ++k)
        a(k - 1, k) = std::sqrt(static_cast<double>(k));
    return a;
}

Operator pauli(Axis axis) {
    Operator s(2, 2);
    switch (axis) {
        case Axis::x:
            s << 0, 1, 1, 0;
            break;
        case Axis::y:
            // sign chosen so the algebra stays right-handed with
            // sigma_z = diag(-1,+1)
            s << 0, Complex(0, 1), Complex(0, -1), 0;
            break;
        case Axis::z:
            s << -1, 0, 0, 1;
            break;
    }
    return s;
}

Operator identity(int dim) { return Operator::Identity(dim, dim); }

Operator embed(const std::vector<Operator>& factors) {
    if (factors.empty())
        throw std::invalid_argument("embed: no factors");
    Operator out = factors.front();
    for (std::size_t k = 1; k < factors.size(); ++k)
        out = Eigen::kroneckerProduct(out, factors[k]).eval();
    return out;
}

StateVector vectorize(const Operator& rho) {
    return Eigen::Map<const StateVector>(rho.data(), rho.size());
}

Operator devectorize(const StateVector& v) {
    const auto d = static_cast<int>(std::llround(std::sqrt(static_cast<double>(v.size()))));
    if (static_cast<long long>(d) * d != v.size())
        throw std::invalid_argument("devectorize: length is not a perfect square");
    return Eigen::Map<const Operator>(v.data(), d, d);
}

SuperOperator left_mult(const Operator& a) {
    return Eigen::kroneckerProduct(identity(static_cast<int>(a.rows())), a);
}

SuperOperator right_mult(const Operator& b) {
    return Eigen::kroneckerProduct(b.transpose(), identity(static_cast<int>(b.rows())));
}

SuperOperator commutator_super(const Operator& h) {
    return Complex(0, -1) * (left_mult(h) - right_mult(h));
}

SuperOperator lindblad_dissipator(const Operator& o) {
    const Operator odo = o.adjoint() * o;
    return Eigen::kroneckerProduct(o.conjugate(), o).eval()
         - 0.5 * (left_mult(odo) + right_mult(odo));
}

double trace_norm(const Operator& a) {
    Eigen::SelfAdjointEigenSolver<Operator> es(a, Eigen::EigenvaluesOnly);
    return es.eigenvalues().cwiseAbs().sum();
}

double max_abs(const Operator& a) {
    return a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff();
}

}  // namespace ramanqed
