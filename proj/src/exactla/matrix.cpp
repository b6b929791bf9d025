#include "hopfcoh/exactla/matrix.hpp"

#include <algorithm>
#include <sstream>

#include "hopfcoh/errors.hpp"

namespace hopfcoh::exactla {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw InputError(what);
}

// Dense scratch row with a list of touched columns.
struct Accumulator {
  std::vector<Rational> val;
  std::vector<char> mark;
  std::vector<std::uint32_t> touched;

  explicit Accumulator(std::size_t n) : val(n), mark(n, 0) {}

  void add(std::uint32_t j, const Rational& v) {
    if (!mark[j]) {
      mark[j] = 1;
      touched.push_back(j);
      val[j] = v;
    } else {
      val[j] += v;
    }
  }

  SparseRow flush() {
    std::sort(touched.begin(), touched.end());
    SparseRow out;
    out.reserve(touched.size());
    for (auto j : touched) {
      if (!val[j].is_zero()) out.emplace_back(j, std::move(val[j]));
      val[j] = Rational();
      mark[j] = 0;
    }
    touched.clear();
    return out;
  }
};

}  // namespace

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.data_[i].emplace_back(static_cast<std::uint32_t>(i), Rational(1));
  return m;
}

Matrix Matrix::from_dense(const std::vector<Vec>& rows) {
  std::size_t c = rows.empty() ? 0 : rows[0].size();
  Matrix m(rows.size(), c);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    require(rows[i].size() == c, "ragged dense matrix");
    for (std::size_t j = 0; j < c; ++j)
      if (!rows[i][j].is_zero()) m.data_[i].emplace_back(static_cast<std::uint32_t>(j), rows[i][j]);
  }
  return m;
}

Matrix Matrix::from_dense(std::size_t rows, std::size_t cols, const std::vector<long long>& entries) {
  require(entries.size() == rows * cols, "dense entry count mismatch");
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (entries[i * cols + j] != 0)
        m.data_[i].emplace_back(static_cast<std::uint32_t>(j), Rational(entries[i * cols + j]));
  return m;
}

Matrix Matrix::column_vector(const Vec& v) {
  Matrix m(v.size(), 1);
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) m.data_[i].emplace_back(0, v[i]);
  return m;
}

Matrix Matrix::row_vector(const Vec& v) {
  Matrix m(1, v.size());
  for (std::size_t j = 0; j < v.size(); ++j)
    if (!v[j].is_zero()) m.data_[0].emplace_back(static_cast<std::uint32_t>(j), v[j]);
  return m;
}

Matrix Matrix::from_columns(std::size_t rows, const std::vector<Vec>& cols) {
  Matrix m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    require(cols[j].size() == rows, "column length mismatch");
    for (std::size_t i = 0; i < rows; ++i)
      if (!cols[j][i].is_zero()) m.data_[i].emplace_back(static_cast<std::uint32_t>(j), cols[j][i]);
  }
  return m;
}

std::size_t Matrix::nnz() const {
  std::size_t n = 0;
  for (const auto& r : data_) n += r.size();
  return n;
}

bool Matrix::is_zero() const {
  for (const auto& r : data_)
    if (!r.empty()) return false;
  return true;
}

Rational Matrix::get(std::size_t i, std::size_t j) const {
  require(i < rows_ && j < cols_, "matrix index out of range");
  const auto& r = data_[i];
  auto it = std::lower_bound(r.begin(), r.end(), j, [](const Entry& e, std::size_t c) { return e.first < c; });
  if (it != r.end() && it->first == j) return it->second;
  return Rational();
}

void Matrix::set(std::size_t i, std::size_t j, const Rational& v) {
  require(i < rows_ && j < cols_, "matrix index out of range");
  auto& r = data_[i];
  auto it = std::lower_bound(r.begin(), r.end(), j, [](const Entry& e, std::size_t c) { return e.first < c; });
  if (it != r.end() && it->first == j) {
    if (v.is_zero())
      r.erase(it);
    else
      it->second = v;
  } else if (!v.is_zero()) {
    r.insert(it, Entry(static_cast<std::uint32_t>(j), v));
  }
}

void Matrix::add_to(std::size_t i, std::size_t j, const Rational& v) {
  if (v.is_zero()) return;
  require(i < rows_ && j < cols_, "matrix index out of range");
  auto& r = data_[i];
  auto it = std::lower_bound(r.begin(), r.end(), j, [](const Entry& e, std::size_t c) { return e.first < c; });
  if (it != r.end() && it->first == j) {
    it->second += v;
    if (it->second.is_zero()) r.erase(it);
  } else {
    r.insert(it, Entry(static_cast<std::uint32_t>(j), v));
  }
}

Vec Matrix::column(std::size_t j) const {
  Vec v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = get(i, j);
  return v;
}

Vec Matrix::dense_row(std::size_t i) const {
  Vec v(cols_);
  for (const auto& [j, x] : data_[i]) v[j] = x;
  return v;
}

std::vector<Vec> Matrix::to_dense() const {
  std::vector<Vec> out(rows_, Vec(cols_));
  for (std::size_t i = 0; i < rows_; ++i)
    for (const auto& [j, x] : data_[i]) out[i][j] = x;
  return out;
}

std::vector<Vec> Matrix::columns() const {
  std::vector<Vec> out(cols_, Vec(rows_));
  for (std::size_t i = 0; i < rows_; ++i)
    for (const auto& [j, x] : data_[i]) out[j][i] = x;
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (const auto& [j, x] : data_[i]) t.data_[j].emplace_back(static_cast<std::uint32_t>(i), x);
  return t;
}

Matrix Matrix::operator-() const {
  Matrix m = *this;
  for (auto& r : m.data_)
    for (auto& e : r) e.second = -e.second;
  return m;
}

Matrix Matrix::scaled(const Rational& s) const {
  if (s.is_zero()) return Matrix(rows_, cols_);
  Matrix m = *this;
  for (auto& r : m.data_)
    for (auto& e : r) e.second *= s;
  return m;
}

Vec Matrix::apply(const Vec& v) const {
  require(v.size() == cols_, "vector length mismatch in apply");
  Vec out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    Rational s;
    for (const auto& [j, x] : data_[i])
      if (!v[j].is_zero()) s += x * v[j];
    out[i] = s;
  }
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  require(a.cols_ == b.rows_, "dimension mismatch in matrix product");
  Matrix c(a.rows_, b.cols_);
  Accumulator acc(b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    const auto& ar = a.data_[i];
    if (ar.empty()) continue;
    if (ar.size() == 1 && ar[0].second.is_one()) {
      c.data_[i] = b.data_[ar[0].first];
      continue;
    }
    for (const auto& [k, x] : ar)
      for (const auto& [j, y] : b.data_[k]) acc.add(j, x * y);
    c.data_[i] = acc.flush();
  }
  return c;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  require(a.rows_ == b.rows_ && a.cols_ == b.cols_, "dimension mismatch in matrix sum");
  Matrix c(a.rows_, a.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    const auto& x = a.data_[i];
    const auto& y = b.data_[i];
    auto& out = c.data_[i];
    out.reserve(x.size() + y.size());
    std::size_t p = 0, q = 0;
    while (p < x.size() || q < y.size()) {
      if (q == y.size() || (p < x.size() && x[p].first < y[q].first)) {
        out.push_back(x[p++]);
      } else if (p == x.size() || y[q].first < x[p].first) {
        out.push_back(y[q++]);
      } else {
        Rational s = x[p].second + y[q].second;
        if (!s.is_zero()) out.emplace_back(x[p].first, std::move(s));
        ++p;
        ++q;
      }
    }
  }
  return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) { return a + (-b); }

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

Matrix Matrix::select_rows(const std::vector<std::size_t>& idx) const {
  Matrix m(idx.size(), cols_);
  for (std::size_t i = 0; i < idx.size(); ++i) {
    require(idx[i] < rows_, "row index out of range");
    m.data_[i] = data_[idx[i]];
  }
  return m;
}

Matrix Matrix::select_columns(const std::vector<std::size_t>& idx) const {
  std::vector<long long> where(cols_, -1);
  for (std::size_t k = 0; k < idx.size(); ++k) {
    require(idx[k] < cols_, "column index out of range");
    where[idx[k]] = static_cast<long long>(k);
  }
  bool sorted = std::is_sorted(idx.begin(), idx.end());
  Matrix m(rows_, idx.size());
  for (std::size_t i = 0; i < rows_; ++i) {
    for (const auto& [j, x] : data_[i])
      if (where[j] >= 0) m.data_[i].emplace_back(static_cast<std::uint32_t>(where[j]), x);
    if (!sorted)
      std::sort(m.data_[i].begin(), m.data_[i].end(), [](const Entry& u, const Entry& v) { return u.first < v.first; });
  }
  return m;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  require(r0 + nr <= rows_ && c0 + nc <= cols_, "block out of range");
  Matrix m(nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (const auto& [j, x] : data_[r0 + i])
      if (j >= c0 && j < c0 + nc) m.data_[i].emplace_back(static_cast<std::uint32_t>(j - c0), x);
  return m;
}

void Matrix::add_block(std::size_t r0, std::size_t c0, const Matrix& m) {
  require(r0 + m.rows_ <= rows_ && c0 + m.cols_ <= cols_, "block out of range");
  for (std::size_t i = 0; i < m.rows_; ++i) {
    if (m.data_[i].empty()) continue;
    auto& dst = data_[r0 + i];
    SparseRow shifted;
    shifted.reserve(m.data_[i].size());
    for (const auto& [j, x] : m.data_[i]) shifted.emplace_back(static_cast<std::uint32_t>(j + c0), x);
    if (dst.empty()) {
      dst = std::move(shifted);
      continue;
    }
    SparseRow out;
    out.reserve(dst.size() + shifted.size());
    std::size_t p = 0, q = 0;
    while (p < dst.size() || q < shifted.size()) {
      if (q == shifted.size() || (p < dst.size() && dst[p].first < shifted[q].first)) {
        out.push_back(dst[p++]);
      } else if (p == dst.size() || shifted[q].first < dst[p].first) {
        out.push_back(shifted[q++]);
      } else {
        Rational s = dst[p].second + shifted[q].second;
        if (!s.is_zero()) out.emplace_back(dst[p].first, std::move(s));
        ++p;
        ++q;
      }
    }
    dst = std::move(out);
  }
}

Matrix Matrix::mod_p(std::uint32_t p) const {
  Matrix m(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (const auto& [j, x] : data_[i]) {
      std::uint32_t r = x.mod(p);
      if (r != 0) m.data_[i].emplace_back(j, Rational(static_cast<long long>(r)));
    }
  return m;
}

bool Matrix::is_integral() const {
  for (const auto& r : data_)
    for (const auto& e : r)
      if (!e.second.is_integer()) return false;
  return true;
}

bool Matrix::first_nonzero(std::size_t& i, std::size_t& j, Rational& v) const {
  for (std::size_t r = 0; r < rows_; ++r)
    if (!data_[r].empty()) {
      i = r;
      j = data_[r][0].first;
      v = data_[r][0].second;
      return true;
    }
  return false;
}

std::string Matrix::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows_; ++i) {
    os << "[";
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << get(i, j);
    os << "]\n";
  }
  return os.str();
}

Matrix MatrixBuilder::finish() {
  Matrix out(rows_.size(), cols_);
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    auto& r = rows_[i];
    std::sort(r.begin(), r.end(), [](const Entry& a, const Entry& b) { return a.first < b.first; });
    SparseRow merged;
    for (auto& e : r) {
      if (!merged.empty() && merged.back().first == e.first)
        merged.back().second += e.second;
      else
        merged.push_back(std::move(e));
    }
    std::erase_if(merged, [](const Entry& e) { return e.second.is_zero(); });
    out.set_row(i, std::move(merged));
    r = {};
  }
  return out;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix c(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    const auto& ar = a.row(i);
    if (ar.empty()) continue;
    for (std::size_t k = 0; k < b.rows(); ++k) {
      const auto& br = b.row(k);
      if (br.empty()) continue;
      SparseRow out;
      out.reserve(ar.size() * br.size());
      for (const auto& [j, x] : ar)
        for (const auto& [l, y] : br)
          out.emplace_back(static_cast<std::uint32_t>(j * b.cols() + l), x * y);
      c.set_row(i * b.rows() + k, std::move(out));
    }
  }
  return c;
}

Matrix kron_all(const std::vector<Matrix>& ms) {
  Matrix r = Matrix::identity(1);
  for (const auto& m : ms) r = kron(r, m);
  return r;
}

Matrix hstack(const std::vector<Matrix>& ms) {
  if (ms.empty()) return Matrix();
  std::size_t rows = ms[0].rows(), cols = 0;
  for (const auto& m : ms) {
    require(m.rows() == rows, "hstack row mismatch");
    cols += m.cols();
  }
  Matrix out(rows, cols);
  std::size_t off = 0;
  for (const auto& m : ms) {
    out.add_block(0, off, m);
    off += m.cols();
  }
  return out;
}

Matrix vstack(const std::vector<Matrix>& ms) {
  if (ms.empty()) return Matrix();
  std::size_t cols = ms[0].cols(), rows = 0;
  for (const auto& m : ms) {
    require(m.cols() == cols, "vstack column mismatch");
    rows += m.rows();
  }
  Matrix out(rows, cols);
  std::size_t off = 0;
  for (const auto& m : ms) {
    for (std::size_t i = 0; i < m.rows(); ++i) out.set_row(off + i, m.row(i));
    off += m.rows();
  }
  return out;
}

Matrix block_diag(const std::vector<Matrix>& ms) {
  std::size_t rows = 0, cols = 0;
  for (const auto& m : ms) {
    rows += m.rows();
    cols += m.cols();
  }
  Matrix out(rows, cols);
  std::size_t r = 0, c = 0;
  for (const auto& m : ms) {
    out.add_block(r, c, m);
    r += m.rows();
    c += m.cols();
  }
  return out;
}

Matrix power_of(const Matrix& m, std::size_t k) {
  Matrix r = Matrix::identity(1);
  for (std::size_t i = 0; i < k; ++i) r = kron(r, m);
  return r;
}

std::size_t tensor_size(const std::vector<std::size_t>& dims) {
  std::size_t n = 1;
  for (auto d : dims) n *= d;
  return n;
}

std::vector<std::size_t> unravel(std::size_t idx, const std::vector<std::size_t>& dims) {
  std::vector<std::size_t> out(dims.size());
  for (std::size_t s = dims.size(); s-- > 0;) {
    out[s] = idx % dims[s];
    idx /= dims[s];
  }
  return out;
}

std::size_t ravel(const std::vector<std::size_t>& multi, const std::vector<std::size_t>& dims) {
  std::size_t idx = 0;
  for (std::size_t s = 0; s < dims.size(); ++s) idx = idx * dims[s] + multi[s];
  return idx;
}

Matrix slot_permutation(const std::vector<std::size_t>& dims, const std::vector<std::size_t>& perm) {
  require(perm.size() == dims.size(), "slot permutation arity mismatch");
  std::vector<std::size_t> tdims(dims.size());
  for (std::size_t t = 0; t < perm.size(); ++t) tdims[t] = dims[perm[t]];
  std::size_t n = tensor_size(dims);
  Matrix m(n, n);
  std::vector<std::size_t> tm(dims.size());
  for (std::size_t src = 0; src < n; ++src) {
    auto sm = unravel(src, dims);
    for (std::size_t t = 0; t < perm.size(); ++t) tm[t] = sm[perm[t]];
    m.set_row(ravel(tm, tdims), SparseRow{Entry(static_cast<std::uint32_t>(src), Rational(1))});
  }
  return m;
}

Vec add(const Vec& a, const Vec& b) {
  require(a.size() == b.size(), "vector length mismatch");
  Vec c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

Vec sub(const Vec& a, const Vec& b) {
  require(a.size() == b.size(), "vector length mismatch");
  Vec c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
  return c;
}

Vec scale(const Vec& a, const Rational& s) {
  Vec c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] * s;
  return c;
}

bool is_zero(const Vec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

}  // namespace hopfcoh::exactla
