#include "afd/almostrep.hpp"

#include <sstream>
#include <stdexcept>

namespace afd::almostrep {

using carrier::AlgebraElement;
using carrier::Carrier;
using carrier::ElementMatrix;
using exactlin::Mat;
using exactlin::Scalar;
using folner::FinSubspace;

namespace {

mpq_class defect_ratio(std::size_t v_dim, std::size_t core_dim) {
  mpq_class d(static_cast<long>(v_dim - core_dim), static_cast<long>(v_dim));
  d.canonicalize();
  return d;
}

}  // namespace

MultTable mult_table(const FinSubspace& L) {
  if (!L.contains_one()) throw std::invalid_argument("mult_table: 1 not in L");
  const Carrier& c = L.carrier();
  MultTable table;
  for (std::size_t i = 0; i < L.dim(); ++i) {
    for (std::size_t j = 0; j < L.dim(); ++j) {
      folner::Reduction red = L.reduce(c.mul(L.basis()[i], L.basis()[j]));
      if (red.in_span()) table.push_back(MultTriple{i, j, std::move(red.coeffs)});
    }
  }
  return table;
}

Mat AlmostRep::image_of(const std::vector<Scalar>& coeffs) const {
  if (coeffs.size() != images.size())
    throw std::invalid_argument("coefficient vector does not match the L-basis");
  Mat out(field, v_dim, v_dim);
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i].is_zero()) continue;
    out = out + images[i].scaled(coeffs[i]);
  }
  return out;
}

Mat AlmostRep::psi(const AlgebraElement& a) const {
  if (!domain) throw std::logic_error("psi: representation has no carrier-backed domain");
  folner::Reduction red = domain->reduce(a);
  if (!red.in_span()) throw std::invalid_argument("psi: element not in L");
  return image_of(red.coeffs);
}

AlmostRep build_from_folner(const FinSubspace& L, const FinSubspace& Q,
                            FolnerRepBuild* build_out) {
  if (!L.carrier().same_carrier(Q.carrier()))
    throw std::invalid_argument("build_from_folner: mixed carriers");
  if (!L.contains_one()) throw std::invalid_argument("build_from_folner: 1 not in L");
  if (Q.dim() == 0) throw std::invalid_argument("build_from_folner: dim Q = 0");

  const Carrier& c = L.carrier();
  const exactlin::Field& f = c.field();
  const std::size_t v = Q.dim();

  FinSubspace ambient = product_space(L, Q);  // LQ, contains Q since 1 in L
  const std::size_t d = ambient.dim();

  // Q's basis in ambient coordinates.
  Mat q_in_ambient(f, d, v);
  for (std::size_t j = 0; j < v; ++j) {
    folner::Reduction red = ambient.reduce(Q.basis()[j]);
    if (!red.in_span()) throw std::logic_error("Q not contained in LQ");
    for (std::size_t i = 0; i < d; ++i) q_in_ambient.set(i, j, red.coeffs[i]);
  }

  // Coordinates of the projection onto Q along the canonical complement
  // (the span of all basis words that are not leading words of Q): reducing
  // an element against Q's echelon basis splits it as (part in Q) + (part
  // supported off Q's leading words).
  Mat to_q_coords(f, v, d);  // ambient coords -> Q coords of the projection
  for (std::size_t k = 0; k < d; ++k) {
    folner::Reduction red = Q.reduce(ambient.basis()[k]);
    for (std::size_t i = 0; i < v; ++i) to_q_coords.set(i, k, red.coeffs[i]);
  }

  // Multiplication operators m_x : Q -> LQ per L-basis element.
  std::vector<Mat> mult_ops;
  mult_ops.reserve(L.dim());
  for (std::size_t x = 0; x < L.dim(); ++x) {
    Mat m(f, d, v);
    for (std::size_t j = 0; j < v; ++j) {
      folner::Reduction red = ambient.reduce(c.mul(L.basis()[x], Q.basis()[j]));
      if (!red.in_span()) throw std::logic_error("L*Q escapes LQ");
      for (std::size_t i = 0; i < d; ++i) m.set(i, j, red.coeffs[i]);
    }
    mult_ops.push_back(std::move(m));
  }

  AlmostRep rep;
  rep.field = f;
  rep.domain = L;
  rep.v_dim = v;
  for (const auto& b : L.basis()) rep.basis_labels.push_back(c.to_string(b));

  folner::Reduction unit_red = L.reduce(c.one());
  rep.unit_coeffs = unit_red.coeffs;  // 1 in L by precondition

  // psi(x) = P o m_x expressed in Q's echelon coordinates.
  for (std::size_t x = 0; x < L.dim(); ++x) rep.images.push_back(to_q_coords * mult_ops[x]);

  // Core: intersection over L's basis of Ker(m_x - P m_x) inside Q, where
  // P m_x has ambient coordinates q_in_ambient * to_q_coords * m_x.
  std::vector<Mat> kernels;
  for (std::size_t x = 0; x < L.dim(); ++x) {
    Mat defect_op = mult_ops[x] - q_in_ambient * rep.images[x];
    kernels.push_back(exactlin::kernel_basis(defect_op));
  }
  rep.core = exactlin::intersect(kernels);
  rep.defect = defect_ratio(v, rep.core.cols());
  rep.table = mult_table(L);

  if (!rep.image_of(rep.unit_coeffs).is_identity())
    throw std::logic_error("unit law failed in the Foelner build");

  if (build_out) {
    build_out->ambient_space = ambient;
    build_out->projection = q_in_ambient * to_q_coords;  // idempotent on LQ
    build_out->mult_ops = std::move(mult_ops);
  }
  return rep;
}

bool VerificationReport::all_pass() const {
  for (const auto& ch : checks)
    if (!ch.pass) return false;
  return true;
}

VerificationReport verify(const AlmostRep& rep) {
  VerificationReport report;
  const exactlin::Field& f = rep.field;

  bool unit_ok = rep.image_of(rep.unit_coeffs).is_identity();
  report.checks.push_back({"unit_law", unit_ok, "psi(1) = I"});

  bool core_indep = exactlin::rank(rep.core) == rep.core.cols();
  report.checks.push_back({"core_columns_independent", core_indep, ""});

  // Maximal multiplicative core: the intersection over all table triples of
  // Ker(psi(b_i) psi(b_j) - psi(b_i b_j)), computed incrementally in the
  // coordinates of the running intersection.
  Mat maximal = Mat::identity(f, rep.v_dim);
  for (const MultTriple& t : rep.table) {
    if (maximal.cols() == 0) break;
    Mat difference = rep.images[t.i] * rep.images[t.j] - rep.image_of(t.coeffs);
    Mat restricted = difference * maximal;
    maximal = maximal * exactlin::kernel_basis(restricted);
  }
  maximal = exactlin::column_space_basis(maximal);
  report.maximal_core_dim = maximal.cols();
  report.maximal_defect = defect_ratio(rep.v_dim, maximal.cols());

  bool contained = rep.core.cols() == 0 || exactlin::in_column_span(maximal, rep.core);
  std::ostringstream d;
  d << "stored " << rep.core.cols() << " of maximal " << maximal.cols();
  report.checks.push_back({"stored_core_in_maximal_core", contained, d.str()});

  bool defect_ok = rep.defect == defect_ratio(rep.v_dim, rep.core.cols());
  report.checks.push_back({"defect_matches_core", defect_ok, ""});
  return report;
}

AlmostRep amplify(const AlmostRep& rep, std::size_t n) {
  if (n == 0) throw std::invalid_argument("amplify: n must be >= 1");
  const std::size_t l = rep.l_dim();
  const std::size_t v = rep.v_dim;
  const exactlin::Field& f = rep.field;

  AlmostRep out;
  out.field = f;
  out.v_dim = n * v;
  // basis (row, col, base element) in row-major order
  auto index = [&](std::size_t r, std::size_t c, std::size_t k) { return (r * n + c) * l + k; };
  out.images.reserve(n * n * l);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      for (std::size_t k = 0; k < l; ++k) {
        std::ostringstream label;
        label << "E[" << r << "," << c << "]*(" << rep.basis_labels[k] << ")";
        out.basis_labels.push_back(label.str());
        Mat img(f, n * v, n * v);
        img.set_block(r * v, c * v, rep.images[k]);
        out.images.push_back(std::move(img));
      }

  out.unit_coeffs.assign(n * n * l, Scalar::zero(f));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t k = 0; k < l; ++k) out.unit_coeffs[index(r, r, k)] = rep.unit_coeffs[k];

  const std::size_t core_cols = rep.core.cols();
  out.core = Mat(f, n * v, n * core_cols);
  for (std::size_t r = 0; r < n; ++r) out.core.set_block(r * v, r * core_cols, rep.core);
  out.defect = defect_ratio(out.v_dim, out.core.cols());

  // (E[r,c] a)(E[r',c'] b) = 0 when c != r', else E[r,c'] ab.
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      for (std::size_t k = 0; k < l; ++k)
        for (std::size_t r2 = 0; r2 < n; ++r2)
          for (std::size_t c2 = 0; c2 < n; ++c2)
            for (std::size_t k2 = 0; k2 < l; ++k2) {
              if (c != r2) {
                out.table.push_back(MultTriple{index(r, c, k), index(r2, c2, k2),
                                               std::vector<Scalar>(n * n * l, Scalar::zero(f))});
              }
            }
  for (const MultTriple& t : rep.table) {
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t c2 = 0; c2 < n; ++c2) {
          std::vector<Scalar> coeffs(n * n * l, Scalar::zero(f));
          for (std::size_t m = 0; m < l; ++m) coeffs[index(r, c2, m)] = t.coeffs[m];
          out.table.push_back(MultTriple{index(r, c, t.i), index(c, c2, t.j), std::move(coeffs)});
        }
  }
  return out;
}

AlmostRep tensor(const AlmostRep& a, const AlmostRep& b) {
  if (a.field != b.field) throw std::invalid_argument("tensor: field mismatch");
  const exactlin::Field& f = a.field;
  const std::size_t la = a.l_dim(), lb = b.l_dim();

  AlmostRep out;
  out.field = f;
  out.v_dim = a.v_dim * b.v_dim;
  auto index = [&](std::size_t i, std::size_t j) { return i * lb + j; };

  out.images.reserve(la * lb);
  for (std::size_t i = 0; i < la; ++i)
    for (std::size_t j = 0; j < lb; ++j) {
      out.basis_labels.push_back("(" + a.basis_labels[i] + ")(x)(" + b.basis_labels[j] + ")");
      out.images.push_back(exactlin::kron(a.images[i], b.images[j]));
    }

  out.unit_coeffs.assign(la * lb, Scalar::zero(f));
  for (std::size_t i = 0; i < la; ++i)
    for (std::size_t j = 0; j < lb; ++j)
      out.unit_coeffs[index(i, j)] = a.unit_coeffs[i] * b.unit_coeffs[j];

  out.core = exactlin::kron(a.core, b.core);
  out.defect = defect_ratio(out.v_dim, out.core.cols());

  // (a_i (x) b_j)(a_k (x) b_l) = (a_i a_k) (x) (b_j b_l); certified when both
  // factor pairs are certified by their tables.
  for (const MultTriple& ta : a.table) {
    for (const MultTriple& tb : b.table) {
      std::vector<Scalar> coeffs(la * lb, Scalar::zero(f));
      for (std::size_t m = 0; m < la; ++m) {
        if (ta.coeffs[m].is_zero()) continue;
        for (std::size_t m2 = 0; m2 < lb; ++m2)
          coeffs[index(m, m2)] = ta.coeffs[m] * tb.coeffs[m2];
      }
      out.table.push_back(MultTriple{index(ta.i, tb.i), index(ta.j, tb.j), std::move(coeffs)});
    }
  }
  return out;
}

exactlin::Mat apply_matrix(const AlmostRep& rep, const ElementMatrix& m) {
  if (!rep.domain) throw std::logic_error("apply_matrix: representation has no carrier domain");
  Mat out(rep.field, m.rows() * rep.v_dim, m.cols() * rep.v_dim);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      folner::Reduction red = rep.domain->reduce(m(i, j));
      if (!red.in_span())
        throw std::invalid_argument("apply_matrix: entry (" + std::to_string(i) + "," +
                                    std::to_string(j) + ") outside L");
      out.set_block(i * rep.v_dim, j * rep.v_dim, rep.image_of(red.coeffs));
    }
  return out;
}

}  // namespace afd::almostrep
