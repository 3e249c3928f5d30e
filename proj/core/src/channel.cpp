#include "icdof/channel.hpp"

#include <stdexcept>

namespace icdof {

ChannelMatrix::ChannelMatrix(int K, std::vector<Rat> entries) : K_(K), e_(std::move(entries)) {
    if (K_ < 2) throw std::invalid_argument("channel matrix needs K >= 2");
    if (e_.size() != static_cast<size_t>(K_) * K_)
        throw std::invalid_argument("channel matrix entry count does not match K*K");
}

std::vector<Rat> ChannelMatrix::offdiag() const {
    std::vector<Rat> v;
    v.reserve(static_cast<size_t>(K_) * (K_ - 1));
    for (int i = 0; i < K_; ++i)
        for (int j = 0; j < K_; ++j)
            if (i != j) v.push_back(at(i, j));
    return v;
}

std::vector<std::pair<int, int>> validate_fully_connected(const ChannelMatrix& m) {
    std::vector<std::pair<int, int>> zeros;
    for (int i = 0; i < m.K(); ++i)
        for (int j = 0; j < m.K(); ++j)
            if (m.at(i, j) == 0) zeros.emplace_back(i, j);
    return zeros;
}

bool is_fully_connected(const ChannelMatrix& m) { return validate_fully_connected(m).empty(); }

ChannelMatrix scale(const ChannelMatrix& m, const std::vector<Rat>& rows,
                    const std::vector<Rat>& cols) {
    const int K = m.K();
    if (rows.size() != static_cast<size_t>(K) || cols.size() != static_cast<size_t>(K))
        throw std::invalid_argument("scaling factor count does not match K");
    for (const auto& r : rows)
        if (r == 0) throw std::invalid_argument("zero row scaling factor");
    for (const auto& c : cols)
        if (c == 0) throw std::invalid_argument("zero column scaling factor");
    std::vector<Rat> e;
    e.reserve(static_cast<size_t>(K) * K);
    for (int i = 0; i < K; ++i)
        for (int j = 0; j < K; ++j) e.push_back(rows[i] * cols[j] * m.at(i, j));
    return ChannelMatrix(K, std::move(e));
}

ChannelMatrix CanonicalForm3::reconstruct() const {
    std::vector<Rat> e = {g[0], Rat(1), Rat(1),  //
                          Rat(1), g[1], Rat(1),  //
                          Rat(1), h, g[2]};
    return ChannelMatrix(3, std::move(e));
}

std::vector<UniPoly> CanonicalForm3::offdiag_symbolic() const {
    std::vector<UniPoly> v(6, UniPoly::constant(1));
    v[5] = UniPoly::monomial(1, 1);  // position (3,2)
    return v;
}

CanonicalForm3 canonicalize3(const ChannelMatrix& m) {
    if (m.K() != 3) throw std::invalid_argument("canonicalize3 requires K = 3");
    if (!is_fully_connected(m)) throw std::invalid_argument("canonicalize3 requires a fully connected matrix");

    // Unique factors with gauge r1 = 1 that set the five off-diagonal
    // positions other than (3,2) to one:
    //   r1*c2*h12 = 1, r1*c3*h13 = 1, r2*c3*h23 = 1, r2*c1*h21 = 1, r3*c1*h31 = 1
    const Rat one(1);
    CanonicalForm3 cf;
    cf.rows[0] = one;
    cf.cols[1] = one / m.at(0, 1);
    cf.cols[2] = one / m.at(0, 2);
    cf.rows[1] = one / (cf.cols[2] * m.at(1, 2));
    cf.cols[0] = one / (cf.rows[1] * m.at(1, 0));
    cf.rows[2] = one / (cf.cols[0] * m.at(2, 0));

    for (int i = 0; i < 3; ++i) {
        cf.g[i] = cf.rows[i] * cf.cols[i] * m.at(i, i);
    }
    cf.h = cf.rows[2] * cf.cols[1] * m.at(2, 1);
    return cf;
}

}  // namespace icdof
