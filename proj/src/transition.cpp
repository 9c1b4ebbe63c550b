#include "cosine/transition.hpp"

#include <cmath>
#include <cstdio>
#include <cstring>
#include <istream>
#include <ostream>

namespace cosine {

TransitionMatrix TransitionMatrix::build(const SignedGraph& g) {
    TransitionMatrix tm;
    tm.matrix_ = g.adjacency();
    const int n = g.node_count();
    for (int i = 0; i < n; ++i) {
        Scalar abs_sum = 0.0;
        for (SparseMatrix::InnerIterator it(tm.matrix_, i); it; ++it) {
            abs_sum += std::abs(it.value());
        }
        if (abs_sum == 0.0) {
            tm.sinks_.push_back(i);
            continue;
        }
        for (SparseMatrix::InnerIterator it(tm.matrix_, i); it; ++it) {
            it.valueRef() /= abs_sum;
        }
    }
    return tm;
}

namespace {

void check_size(const TransitionMatrix& tm, Eigen::Index rows, const char* what) {
    if (rows != tm.node_count()) {
        throw InputError(std::string(what) + " length does not match node count");
    }
}

}  // namespace

Vector propagate_forward(const TransitionMatrix& tm, Vector c0, int steps,
                         const StepCallback& on_step) {
    check_size(tm, c0.size(), "opinion vector");
    if (steps < 0) throw InputError("time step must be >= 0");
    Vector next(c0.size());
    for (int t = 1; t <= steps; ++t) {
        step_forward(tm, c0, next);
        c0.swap(next);
        if (on_step) on_step(t, c0);
    }
    return c0;
}

Matrix propagate_forward_multi(const TransitionMatrix& tm, Matrix c0, int steps) {
    check_size(tm, c0.rows(), "opinion matrix");
    if (steps < 0) throw InputError("time step must be >= 0");
    Matrix next(c0.rows(), c0.cols());
    for (int t = 1; t <= steps; ++t) {
        step_forward(tm, c0, next);
        c0.swap(next);
    }
    return c0;
}

Vector propagate_reverse(const TransitionMatrix& tm, Vector start, int steps) {
    check_size(tm, start.size(), "score vector");
    if (steps < 0) throw InputError("time step must be >= 0");
    Vector next(start.size());
    for (int t = 1; t <= steps; ++t) {
        step_reverse(tm, start, next);
        start.swap(next);
    }
    return start;
}

InfluenceScores propagate_reverse(const TransitionMatrix& tm, const PartitionVector& rho,
                                  int steps) {
    return {propagate_reverse(tm, rho.to_vector(), steps), steps};
}

namespace {

constexpr char kMagic[8] = {'C', 'O', 'S', 'I', 'N', 'E', 'P', '\0'};
constexpr std::uint32_t kVersion = 1;

template <class T>
void write_pod(std::ostream& out, const T& v) {
    out.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

template <class T>
void read_pod(std::istream& in, T& v) {
    in.read(reinterpret_cast<char*>(&v), sizeof(T));
    if (!in) throw InputError("truncated transition matrix file");
}

}  // namespace

void save_transition(const TransitionMatrix& tm, std::ostream& out) {
    const SparseMatrix& m = tm.matrix();
    out.write(kMagic, sizeof(kMagic));
    write_pod(out, kVersion);
    write_pod(out, static_cast<std::int64_t>(m.rows()));
    write_pod(out, static_cast<std::int64_t>(m.nonZeros()));
    for (Eigen::Index i = 0; i <= m.rows(); ++i) {
        write_pod(out, static_cast<std::int64_t>(m.outerIndexPtr()[i]));
    }
    for (Eigen::Index k = 0; k < m.nonZeros(); ++k) {
        write_pod(out, static_cast<std::int64_t>(m.innerIndexPtr()[k]));
    }
    out.write(reinterpret_cast<const char*>(m.valuePtr()),
              static_cast<std::streamsize>(sizeof(Scalar) * m.nonZeros()));
}

TransitionMatrix load_transition(std::istream& in) {
    char magic[8];
    in.read(magic, sizeof(magic));
    if (!in || std::memcmp(magic, kMagic, sizeof(kMagic)) != 0) {
        throw InputError("not a transition matrix file");
    }
    std::uint32_t version = 0;
    read_pod(in, version);
    if (version != kVersion) throw InputError("unsupported transition matrix version");
    std::int64_t n = 0, nnz = 0;
    read_pod(in, n);
    read_pod(in, nnz);
    if (n < 1 || nnz < 0) throw InputError("corrupt transition matrix header");

    std::vector<std::int64_t> offsets(static_cast<std::size_t>(n) + 1);
    for (auto& o : offsets) read_pod(in, o);
    if (offsets.front() != 0 || offsets.back() != nnz) {
        throw InputError("corrupt transition matrix offsets");
    }
    std::vector<std::int64_t> cols(static_cast<std::size_t>(nnz));
    for (auto& c : cols) read_pod(in, c);
    std::vector<Scalar> values(static_cast<std::size_t>(nnz));
    in.read(reinterpret_cast<char*>(values.data()),
            static_cast<std::streamsize>(sizeof(Scalar) * values.size()));
    if (!in) throw InputError("truncated transition matrix file");

    TransitionMatrix tm;
    tm.matrix_.resize(n, n);
    tm.matrix_.reserve(static_cast<Eigen::Index>(nnz));
    for (std::int64_t i = 0; i < n; ++i) {
        tm.matrix_.startVec(static_cast<Eigen::Index>(i));
        if (offsets[i] > offsets[i + 1]) throw InputError("corrupt transition matrix offsets");
        for (std::int64_t k = offsets[i]; k < offsets[i + 1]; ++k) {
            std::int64_t c = cols[static_cast<std::size_t>(k)];
            if (c < 0 || c >= n) throw InputError("corrupt transition matrix column index");
            tm.matrix_.insertBack(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(c)) =
                values[static_cast<std::size_t>(k)];
        }
        if (offsets[i] == offsets[i + 1]) tm.sinks_.push_back(static_cast<int>(i));
    }
    tm.matrix_.finalize();
    return tm;
}

void write_trajectory_csv(const TransitionMatrix& tm, const Vector& c0, int steps,
                          std::ostream& out) {
    char buf[40];
    auto emit = [&](int t, const Vector& v) {
        for (Eigen::Index i = 0; i < v.size(); ++i) {
            std::snprintf(buf, sizeof(buf), "%.17g", v[i]);
            out << t << ',' << i << ',' << buf << '\n';
        }
    };
    out << "t,node,value\n";
    emit(0, c0);
    propagate_forward(tm, c0, steps, emit);
}

}  // namespace cosine
