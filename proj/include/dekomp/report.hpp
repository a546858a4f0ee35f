#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dekomp/matrix.hpp"

namespace dekomp {

// Invertible pair (P,Q) with the block-diagonal matrix W = P * A' * Q it
// produces from the reduced presentation A'. Over a local ring bn(W) equals
// the decomposition number.
struct Certificate {
    Mat a_prime;
    Mat P, Pinv, Q, Qinv;
    Mat W;

    void verify() const {
        if (P.mul(Pinv) != Mat::identity(P.ring(), P.rows()) ||
            Pinv.mul(P) != Mat::identity(P.ring(), P.rows()))
            throw DomainError("certificate: P not invertible");
        if (Q.mul(Qinv) != Mat::identity(Q.ring(), Q.rows()) ||
            Qinv.mul(Q) != Mat::identity(Q.ring(), Q.rows()))
            throw DomainError("certificate: Q not invertible");
        if (P.mul(a_prime).mul(Q) != W)
            throw DomainError("certificate: P*A'*Q != W");
    }
};

struct Summand {
    Mat presentation;           // minimized
    int multiplicity = 1;
    std::optional<Int> module_size;  // nullopt = infinite (free summand over Z or GF(p)[x])
};

struct DecompositionReport {
    Ring ring;
    Mat input;
    std::string engine;  // "idempotent" | "snf" | "valuation" | "snf-stacked"
    long long dn = 0;
    std::vector<Summand> summands;
    std::optional<Certificate> certificate;
};

// Deterministic summand order: free/infinite summands first, then by module
// size, then by presentation text.
inline bool summand_order(const Summand& a, const Summand& b) {
    bool fa = !a.module_size.has_value(), fb = !b.module_size.has_value();
    if (fa != fb) return fa;
    if (!fa && *a.module_size != *b.module_size) return *a.module_size < *b.module_size;
    return a.presentation.body_text() < b.presentation.body_text();
}

}  // namespace dekomp
