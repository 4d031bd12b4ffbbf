#pragma once

#include <optional>
#include <vector>

#include "commute/errors.hpp"
#include "commute/matrix.hpp"

namespace commute {

/// Tolerances shared across the library. Defaults sit one to two orders
/// above double-precision eigensolver noise at n <= 16.
struct TolerancePolicy {
    double herm = 1e-12;    // Hermitian symmetrization residual
    double comm = 1e-10;    // pairwise commutator acceptance (relative)
    double group = 1e-8;    // joint-eigenvalue grouping distance
    double psd = 1e-9;      // PSD verdict cutoff
    double oracle = 1e-8;   // cross-route oracle agreement

    void validate() const {
        if (herm <= 0 || comm <= 0 || group <= 0 || psd <= 0 || oracle <= 0)
            throw InvalidArgument("all tolerances must be strictly positive");
        if (group < comm) throw InvalidArgument("group tolerance must be >= commutator tolerance");
    }
};

/// n x n complex matrix with A = A*. Construction symmetrizes
/// (A <- (A+A*)/2) and zeroes the imaginary part of the diagonal; the
/// pre-symmetrization defect is kept for inspection.
class HermitianMatrix {
public:
    HermitianMatrix() = default;
    explicit HermitianMatrix(const Matrix& raw);

    static HermitianMatrix zero(std::size_t n) { return HermitianMatrix(Matrix(n, n)); }
    static HermitianMatrix identity(std::size_t n) { return HermitianMatrix(Matrix::identity(n)); }
    static HermitianMatrix diagonal(const std::vector<double>& d);

    std::size_t dim() const { return a_.rows(); }
    const Matrix& mat() const { return a_; }
    Complex operator()(std::size_t i, std::size_t j) const { return a_(i, j); }

    /// ||raw - raw*||_max seen at construction.
    double symmetrization_defect() const { return defect_; }

private:
    Matrix a_;
    double defect_ = 0.0;
};

/// d-tuple of same-dimension Hermitian matrices; no commutation requirement.
/// These are the ambient directions.
class SelfAdjointTuple {
public:
    SelfAdjointTuple() = default;
    explicit SelfAdjointTuple(std::vector<HermitianMatrix> components);

    int count() const { return static_cast<int>(components_.size()); }  // d
    std::size_t dim() const { return components_.empty() ? 0 : components_[0].dim(); }
    const HermitianMatrix& component(int r) const { return components_[static_cast<std::size_t>(r)]; }
    const std::vector<HermitianMatrix>& components() const { return components_; }

    static SelfAdjointTuple zero(std::size_t n, int d);

private:
    std::vector<HermitianMatrix> components_;
};

SelfAdjointTuple tuple_add(const SelfAdjointTuple& a, const SelfAdjointTuple& b);
SelfAdjointTuple tuple_sub(const SelfAdjointTuple& a, const SelfAdjointTuple& b);
SelfAdjointTuple tuple_scale(double c, const SelfAdjointTuple& a);

/// max_r of the operator norm of the components.
double tuple_norm(const SelfAdjointTuple& s);
/// max_r max_ij |(S^r)_ij|; cheaper companion norm used in some residual
/// scalings (n ||A|| <= n^2 max |A_ij| relates the two).
double tuple_max_abs(const SelfAdjointTuple& s);

struct ValidateResult;

/// A SelfAdjointTuple whose pairwise commutators passed validation.
class CommutingTuple {
public:
    const SelfAdjointTuple& tuple() const { return s_; }
    int count() const { return s_.count(); }
    std::size_t dim() const { return s_.dim(); }
    const HermitianMatrix& component(int r) const { return s_.component(r); }

    /// Convenience: validate and throw NotCommuting on failure.
    static CommutingTuple require(const SelfAdjointTuple& s, const TolerancePolicy& tol = {});

private:
    explicit CommutingTuple(SelfAdjointTuple s) : s_(std::move(s)) {}
    friend ValidateResult validate_commuting(const SelfAdjointTuple&, const TolerancePolicy&);
    SelfAdjointTuple s_;
};

struct CommutatorViolation {
    int r, s;
    double norm;    // ||[S^r, S^s]||_max
    double bound;   // tolerance it was compared against
};

struct ValidateResult {
    std::optional<CommutingTuple> tuple;
    std::vector<CommutatorViolation> violations;
    bool ok() const { return tuple.has_value(); }
};

/// Gatekeeper: accepts iff ||[S^r,S^s]||_max <= comm * (1 + ||S^r|| ||S^s||)
/// for every pair; otherwise the report lists the offending pairs.
ValidateResult validate_commuting(const SelfAdjointTuple& s, const TolerancePolicy& tol = {});

}  // namespace commute
