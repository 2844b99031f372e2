#include "hom3/io.hpp"

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

namespace hom3::io {

namespace {

std::string escape_token(const std::string &key) {
  std::string out;
  for (char c : key) {
    if (c == '~')
      out += "~0";
    else if (c == '/')
      out += "~1";
    else
      out += c;
  }
  return out;
}

// Walks already-validated JSON text and records the line of every value.
class LineScanner {
public:
  LineScanner(const std::string &text, std::map<std::string, std::size_t> &out)
      : t_(text), out_(out) {}

  void run() { value(""); }

private:
  void skip_ws() {
    while (pos_ < t_.size() && std::isspace(static_cast<unsigned char>(t_[pos_]))) {
      if (t_[pos_] == '\n')
        ++line_;
      ++pos_;
    }
  }

  std::string string_token() {
    std::string s;
    ++pos_;
    while (pos_ < t_.size() && t_[pos_] != '"') {
      if (t_[pos_] == '\\' && pos_ + 1 < t_.size()) {
        ++pos_;
        s += t_[pos_] == 'n' ? '\n' : t_[pos_];
      } else {
        s += t_[pos_];
      }
      ++pos_;
    }
    ++pos_;
    return s;
  }

  void value(const std::string &ptr) {
    skip_ws();
    if (pos_ >= t_.size())
      return;
    out_.emplace(ptr, line_);
    const char c = t_[pos_];
    if (c == '{') {
      ++pos_;
      skip_ws();
      if (pos_ < t_.size() && t_[pos_] == '}') {
        ++pos_;
        return;
      }
      while (pos_ < t_.size()) {
        skip_ws();
        const std::string key = string_token();
        skip_ws();
        ++pos_; // ':'
        value(ptr + "/" + escape_token(key));
        skip_ws();
        if (pos_ < t_.size() && t_[pos_++] == '}')
          return;
      }
    } else if (c == '[') {
      ++pos_;
      skip_ws();
      if (pos_ < t_.size() && t_[pos_] == ']') {
        ++pos_;
        return;
      }
      for (std::size_t i = 0; pos_ < t_.size(); ++i) {
        value(ptr + "/" + std::to_string(i));
        skip_ws();
        if (pos_ < t_.size() && t_[pos_++] == ']')
          return;
      }
    } else if (c == '"') {
      string_token();
    } else {
      while (pos_ < t_.size() && t_[pos_] != ',' && t_[pos_] != ']' && t_[pos_] != '}' &&
             !std::isspace(static_cast<unsigned char>(t_[pos_])))
        ++pos_;
    }
  }

  const std::string &t_;
  std::map<std::string, std::size_t> &out_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
};

std::size_t line_at_offset(const std::string &text, std::size_t offset) {
  std::size_t line = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i)
    if (text[i] == '\n')
      ++line;
  return line;
}

// A value inside a Source, addressed by its JSON pointer.
struct Node {
  const Source *src;
  const Json *j;
  std::string ptr;

  [[noreturn]] void fail(const std::string &msg) const { src->error(ptr, msg); }

  const Json &operator*() const { return *j; }

  void expect_object() const {
    if (!j->is_object())
      fail("expected an object");
  }

  std::optional<Node> opt(const std::string &key) const {
    expect_object();
    auto it = j->find(key);
    if (it == j->end())
      return std::nullopt;
    return Node{src, &*it, ptr + "/" + escape_token(key)};
  }

  Node at(const std::string &key) const {
    auto n = opt(key);
    if (!n)
      fail("missing field \"" + key + "\"");
    return *n;
  }

  std::size_t size() const {
    if (!j->is_array())
      fail("expected an array");
    return j->size();
  }

  Node at(std::size_t i) const { return Node{src, &(*j)[i], ptr + "/" + std::to_string(i)}; }

  std::string str() const {
    if (!j->is_string())
      fail("expected a string");
    return j->get<std::string>();
  }

  std::size_t positive(const ReadOptions &opt) const {
    if (!j->is_number_integer() || j->get<long long>() <= 0)
      fail("expected a positive integer");
    const auto v = static_cast<std::size_t>(j->get<long long>());
    if (opt.max_dim != 0 && v > opt.max_dim)
      fail("dimension " + std::to_string(v) + " exceeds the limit of " +
           std::to_string(opt.max_dim));
    return v;
  }

  // 1-based index in [1, n], returned 0-based.
  std::size_t index(std::size_t n) const {
    if (!j->is_number_integer())
      fail("expected an integer index");
    const long long v = j->get<long long>();
    if (v < 1 || v > static_cast<long long>(n))
      fail("index " + std::to_string(v) + " is outside 1.." + std::to_string(n));
    return static_cast<std::size_t>(v - 1);
  }

  Rat rat() const {
    if (j->is_number_integer())
      return Rat(j->dump());
    if (j->is_string()) {
      try {
        return parse_rat(j->get<std::string>());
      } catch (const InputError &e) {
        fail(e.what());
      }
    }
    fail("expected an exact rational such as \"3/4\"");
  }

  Mat matrix(std::size_t rows, std::size_t cols) const {
    if (size() != rows)
      fail("expected " + std::to_string(rows) + " rows, found " + std::to_string(j->size()));
    Mat m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
      const Node row = at(r);
      if (row.size() != cols)
        row.fail("expected " + std::to_string(cols) + " entries, found " +
                 std::to_string(row.j->size()));
      for (std::size_t c = 0; c < cols; ++c)
        m(r, c) = row.at(c).rat();
    }
    return m;
  }

  // A square matrix whose size is read from the data.
  Mat square(const ReadOptions &opt) const {
    const std::size_t n = size();
    if (n == 0)
      fail("expected a nonempty matrix");
    if (opt.max_dim != 0 && n > opt.max_dim)
      fail("dimension " + std::to_string(n) + " exceeds the limit of " +
           std::to_string(opt.max_dim));
    return matrix(n, n);
  }
};

Node root_node(const Source &s) { return Node{&s, &s.root(), ""}; }

void expect_type(const Node &n, const std::string &type) {
  n.expect_object();
  if (auto t = n.opt("type"); t && t->str() != type)
    t->fail("expected type \"" + type + "\", found \"" + t->str() + "\"");
}

// An inline object, or a path to a file holding one.
template <class F> auto nested(const Node &n, F &&read) {
  if (n.j->is_string()) {
    const std::filesystem::path path = n.src->dir() / n.str();
    Source sub = [&] {
      try {
        return Source::load(path);
      } catch (const InputError &e) {
        n.fail(e.what());
      }
    }();
    return read(root_node(sub));
  }
  return read(n);
}

std::string optional_label(const Node &n) {
  if (auto l = n.opt("label"))
    return l->str();
  return {};
}

std::optional<std::vector<std::string>> basis(const Node &n, std::size_t dim) {
  auto b = n.opt("basis");
  if (!b)
    return std::nullopt;
  if (b->size() != dim)
    b->fail("expected " + std::to_string(dim) + " basis names, found " +
            std::to_string(b->j->size()));
  std::vector<std::string> names;
  std::set<std::string> seen;
  for (std::size_t i = 0; i < dim; ++i) {
    names.push_back(b->at(i).str());
    if (!seen.insert(names.back()).second)
      b->at(i).fail("duplicate basis name \"" + names.back() + "\"");
  }
  return names;
}

Mat twist_or_identity(const Node &n, const char *key, std::size_t dim) {
  if (auto t = n.opt(key))
    return t->matrix(dim, dim);
  return Mat::identity(dim);
}

Algebra3 algebra_at(const Node &n, const ReadOptions &opt) {
  expect_type(n, "algebra");
  const std::size_t dim = n.at("dim").positive(opt);
  Tensor4 c({dim, dim, dim, dim});
  std::set<std::array<std::size_t, 4>> seen;
  if (auto rows = n.opt("bracket"))
    for (std::size_t r = 0; r < rows->size(); ++r) {
      const Node row = rows->at(r);
      if (row.size() != 5)
        row.fail("expected [i, j, k, l, value]");
      const std::size_t i = row.at(0).index(dim), j = row.at(1).index(dim),
                        k = row.at(2).index(dim), l = row.at(3).index(dim);
      if (i == j || j == k || i == k)
        row.fail("repeated index in bracket row");
      if (!(i < j && j < k))
        row.fail("bracket rows need i < j < k");
      if (!seen.insert({i, j, k, l}).second)
        row.fail("duplicate bracket row");
      const Rat v = row.at(4).rat();
      c(i, j, k, l) = v;
      c(j, k, i, l) = v;
      c(k, i, j, l) = v;
      c(j, i, k, l) = -v;
      c(i, k, j, l) = -v;
      c(k, j, i, l) = -v;
    }
  Algebra3 a(dim, std::move(c), twist_or_identity(n, "twist", dim), optional_label(n));
  if (auto names = basis(n, dim))
    a.set_basis_names(std::move(*names));
  return a;
}

Algebra3 algebra_field(const Node &n, const ReadOptions &opt) {
  return nested(n.at("algebra"), [&](const Node &m) { return algebra_at(m, opt); });
}

// [i, j, matrix] rows; with `skew` only i < j is allowed and (j, i) is
// filled with the negative.
Tensor4 slice_rows(const Node &rows, std::size_t dim, std::size_t vdim, bool skew) {
  Tensor4 t({dim, dim, vdim, vdim});
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const Node row = rows.at(r);
    if (row.size() != 3)
      row.fail("expected [i, j, matrix]");
    const std::size_t i = row.at(0).index(dim), j = row.at(1).index(dim);
    if (skew && i >= j)
      row.fail("rows need i < j");
    if (!seen.insert({i, j}).second)
      row.fail("duplicate row");
    const Mat m = row.at(2).matrix(vdim, vdim);
    t.set_slice(i, j, m);
    if (skew)
      t.set_slice(j, i, Rat(-1) * m);
  }
  return t;
}

Rep3 rep_at(const Node &n, const ReadOptions &opt) {
  expect_type(n, "rep");
  Algebra3 base = algebra_field(n, opt);
  const std::size_t vdim = n.at("vdim").positive(opt);
  Tensor4 rho = n.opt("rho") ? slice_rows(n.at("rho"), base.dim(), vdim, true)
                             : Tensor4({base.dim(), base.dim(), vdim, vdim});
  Mat a = twist_or_identity(n, "A", vdim);
  return Rep3(std::move(base), vdim, std::move(rho), std::move(a));
}

Rep3 rep_field(const Node &n, const char *key, const ReadOptions &opt) {
  return nested(n.at(key), [&](const Node &m) { return rep_at(m, opt); });
}

PreLie3 prelie_at(const Node &n, const ReadOptions &opt) {
  expect_type(n, "prelie");
  const std::size_t dim = n.at("dim").positive(opt);
  Tensor4 p({dim, dim, dim, dim});
  std::set<std::array<std::size_t, 4>> seen;
  if (auto rows = n.opt("bracket"))
    for (std::size_t r = 0; r < rows->size(); ++r) {
      const Node row = rows->at(r);
      if (row.size() != 5)
        row.fail("expected [i, j, k, l, value]");
      const std::size_t i = row.at(0).index(dim), j = row.at(1).index(dim),
                        k = row.at(2).index(dim), l = row.at(3).index(dim);
      if (i == j)
        row.fail("repeated index in the skew pair");
      if (i > j)
        row.fail("rows need i < j");
      if (!seen.insert({i, j, k, l}).second)
        row.fail("duplicate product row");
      const Rat v = row.at(4).rat();
      p(i, j, k, l) = v;
      p(j, i, k, l) = -v;
    }
  PreLie3 out(dim, std::move(p), twist_or_identity(n, "twist", dim), optional_label(n));
  if (auto names = basis(n, dim))
    out.set_basis_names(std::move(*names));
  return out;
}

CheckReport report_at(const Node &n) {
  CheckReport r;
  r.name = n.at("name").str();
  const Node passed = n.at("passed");
  if (!passed.j->is_boolean())
    passed.fail("expected true or false");
  r.passed = passed.j->get<bool>();
  const Node checked = n.at("checked");
  if (!checked.j->is_number_unsigned())
    checked.fail("expected a count");
  r.checked = checked.j->get<std::uint64_t>();
  const Node w = n.at("witness");
  if (!w.j->is_null()) {
    Witness wit;
    wit.clause = w.at("clause").str();
    const Node tuple = w.at("tuple");
    for (std::size_t i = 0; i < tuple.size(); ++i) {
      const Node e = tuple.at(i);
      if (!e.j->is_number_integer() || e.j->get<long long>() < 1)
        e.fail("expected a 1-based index");
      wit.tuple.push_back(static_cast<std::size_t>(e.j->get<long long>() - 1));
    }
    wit.lhs = w.at("lhs").str();
    wit.rhs = w.at("rhs").str();
    r.witness = std::move(wit);
  }
  if (r.passed == r.witness.has_value())
    n.fail("a report has a witness exactly when it failed");
  const Node notes = n.at("notes");
  for (std::size_t i = 0; i < notes.size(); ++i)
    r.notes.push_back(notes.at(i).str());
  const Node parts = n.at("parts");
  for (std::size_t i = 0; i < parts.size(); ++i)
    r.parts.push_back(report_at(parts.at(i)));
  return r;
}

Json rat_json(const Rat &v) { return to_string(v); }

void put_meta(Json &j, const std::string &label, const std::vector<std::string> &names) {
  if (!label.empty())
    j["label"] = label;
  j["basis"] = names;
}

Json slice_rows_json(const Tensor4 &t, bool skew) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < t.dim(0); ++i)
    for (std::size_t j = skew ? i + 1 : 0; j < t.dim(1); ++j) {
      const Mat m = t.slice(i, j);
      if (!m.is_zero())
        rows.push_back(Json::array({i + 1, j + 1, matrix_json(m)}));
    }
  return rows;
}

bool skew_slices(const Tensor4 &t) {
  for (std::size_t i = 0; i < t.dim(0); ++i)
    for (std::size_t j = i; j < t.dim(1); ++j)
      if (!(t.slice(i, j) + t.slice(j, i)).is_zero())
        return false;
  return true;
}

bool is_scalar(const Json &j) { return !j.is_array() && !j.is_object(); }

void dump_into(const Json &j, std::size_t indent, std::string &out) {
  const std::string pad(indent * 2, ' '), inner((indent + 1) * 2, ' ');
  if (j.is_array()) {
    if (j.empty()) {
      out += "[]";
      return;
    }
    bool flat = true;
    for (const auto &e : j)
      flat = flat && is_scalar(e);
    if (flat) {
      out += '[';
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i)
          out += ", ";
        out += j[i].dump();
      }
      out += ']';
      return;
    }
    out += "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      out += inner;
      dump_into(j[i], indent + 1, out);
      out += i + 1 < j.size() ? ",\n" : "\n";
    }
    out += pad + ']';
  } else if (j.is_object()) {
    if (j.empty()) {
      out += "{}";
      return;
    }
    out += "{\n";
    std::size_t i = 0;
    for (auto it = j.begin(); it != j.end(); ++it, ++i) {
      out += inner + Json(it.key()).dump() + ": ";
      dump_into(it.value(), indent + 1, out);
      out += i + 1 < j.size() ? ",\n" : "\n";
    }
    out += pad + '}';
  } else {
    out += j.dump();
  }
}

} // namespace

Source Source::load(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw InputError(path.string() + ": cannot open file");
  std::stringstream ss;
  ss << in.rdbuf();
  return from_text(ss.str(), path.string(), path.parent_path());
}

Source Source::from_text(std::string text, std::string name, std::filesystem::path dir) {
  Source s;
  s.name_ = std::move(name);
  s.dir_ = dir.empty() ? std::filesystem::path(".") : std::move(dir);
  s.text_ = std::move(text);
  try {
    s.root_ = Json::parse(s.text_);
  } catch (const nlohmann::json::parse_error &e) {
    throw InputError(s.name_ + ":" + std::to_string(line_at_offset(s.text_, e.byte)) +
                     ": malformed JSON: " + e.what());
  }
  LineScanner(s.text_, s.lines_).run();
  return s;
}

std::size_t Source::line_of(const std::string &pointer) const {
  std::string p = pointer;
  while (true) {
    if (auto it = lines_.find(p); it != lines_.end())
      return it->second;
    if (p.empty())
      return 1;
    p.erase(p.rfind('/'));
  }
}

void Source::error(const std::string &pointer, const std::string &message) const {
  throw InputError(name_ + ":" + std::to_string(line_of(pointer)) + ": " +
                   (pointer.empty() ? std::string("/") : pointer) + ": " + message);
}

Algebra3 read_algebra(const Source &s, const ReadOptions &opt) {
  return algebra_at(root_node(s), opt);
}

Rep3 read_rep(const Source &s, const ReadOptions &opt) { return rep_at(root_node(s), opt); }

PreLie3 read_prelie(const Source &s, const ReadOptions &opt) {
  return prelie_at(root_node(s), opt);
}

PreLieRep read_prelie_rep(const Source &s, const ReadOptions &opt) {
  const Node n = root_node(s);
  expect_type(n, "prelie-rep");
  PreLie3 base = nested(n.at("prelie"), [&](const Node &m) { return prelie_at(m, opt); });
  const std::size_t dim = base.dim(), vdim = n.at("vdim").positive(opt);
  Tensor4 rho = n.opt("rho") ? slice_rows(n.at("rho"), dim, vdim, true)
                             : Tensor4({dim, dim, vdim, vdim});
  Tensor4 mu = n.opt("mu") ? slice_rows(n.at("mu"), dim, vdim, false)
                           : Tensor4({dim, dim, vdim, vdim});
  Mat b = twist_or_identity(n, "B", vdim);
  return PreLieRep(std::move(base), vdim, std::move(rho), std::move(mu), std::move(b));
}

Cobracket read_cobracket(const Source &s, const ReadOptions &opt) {
  const Node n = root_node(s);
  expect_type(n, "cobracket");
  Algebra3 base = algebra_field(n, opt);
  const std::size_t dim = base.dim();
  Tensor4 d({dim, dim, dim, dim});
  std::set<std::array<std::size_t, 4>> seen;
  if (auto rows = n.opt("delta"))
    for (std::size_t r = 0; r < rows->size(); ++r) {
      const Node row = rows->at(r);
      if (row.size() != 5)
        row.fail("expected [i, j, l, k, value]");
      const std::size_t i = row.at(0).index(dim), j = row.at(1).index(dim),
                        l = row.at(2).index(dim), k = row.at(3).index(dim);
      if (!seen.insert({i, j, l, k}).second)
        row.fail("duplicate delta row");
      d(i, j, l, k) = row.at(4).rat();
    }
  return Cobracket(std::move(base), std::move(d));
}

RTensor read_r_matrix(const Source &s, const ReadOptions &opt) {
  const Node n = root_node(s);
  expect_type(n, "r-matrix");
  Algebra3 base = algebra_field(n, opt);
  Mat r = n.at("r").matrix(base.dim(), base.dim());
  return RTensor(std::move(base), std::move(r));
}

BilForm read_form(const Source &s, const ReadOptions &opt) {
  const Node n = root_node(s);
  expect_type(n, "form");
  const Node kind = n.at("kind");
  BilForm::Kind k;
  try {
    k = parse_kind(kind.str());
  } catch (const InputError &e) {
    kind.fail(e.what());
  }
  const Node m = n.at("matrix");
  try {
    return BilForm(m.square(opt), k);
  } catch (const InputError &e) {
    m.fail(e.what());
  }
}

Mat read_matrix(const Source &s, const ReadOptions &opt) {
  const Node n = root_node(s);
  expect_type(n, "matrix");
  const Node m = n.at("matrix");
  const std::size_t rows = m.size();
  if (rows == 0)
    m.fail("expected a nonempty matrix");
  const std::size_t cols = m.at(0).size();
  if (opt.max_dim != 0 && (rows > opt.max_dim || cols > opt.max_dim))
    m.fail("dimension exceeds the limit of " + std::to_string(opt.max_dim));
  return m.matrix(rows, cols);
}

std::vector<Mat> read_matrix_list(const Source &s, const ReadOptions &opt) {
  const Node n = root_node(s);
  expect_type(n, "matrix-list");
  const Node list = n.at("matrices");
  std::vector<Mat> out;
  for (std::size_t i = 0; i < list.size(); ++i)
    out.push_back(list.at(i).square(opt));
  for (std::size_t i = 1; i < out.size(); ++i)
    if (out[i].rows() != out[0].rows())
      list.at(i).fail("matrix is " + std::to_string(out[i].rows()) + "x" +
                      std::to_string(out[i].rows()) + " but the first is " +
                      std::to_string(out[0].rows()) + "x" + std::to_string(out[0].rows()));
  return out;
}

OOperator read_o_operator(const Source &s, const ReadOptions &opt) {
  const Node n = root_node(s);
  expect_type(n, "o-operator");
  Rep3 rep = rep_field(n, "rep", opt);
  Mat t = n.at("T").matrix(rep.base().dim(), rep.vdim());
  return {std::move(rep), std::move(t)};
}

MatchedPairData read_matched_pair(const Source &s, const ReadOptions &opt) {
  const Node n = root_node(s);
  expect_type(n, "matched-pair");
  Rep3 rho = rep_field(n, "rho", opt);
  Rep3 mu = rep_field(n, "mu", opt);
  if (rho.vdim() != mu.base().dim())
    n.at("mu").fail("rho acts on a space of dimension " + std::to_string(rho.vdim()) +
                    " but mu's algebra has dimension " + std::to_string(mu.base().dim()));
  if (mu.vdim() != rho.base().dim())
    n.at("mu").fail("mu acts on a space of dimension " + std::to_string(mu.vdim()) +
                    " but rho's algebra has dimension " + std::to_string(rho.base().dim()));
  if (!(rho.carrier_twist() == mu.base().twist()))
    n.at("rho").fail("rho's carrier twist differs from the twist of mu's algebra");
  if (!(mu.carrier_twist() == rho.base().twist()))
    n.at("mu").fail("mu's carrier twist differs from the twist of rho's algebra");
  Algebra3 left = rho.base(), right = mu.base();
  return {std::move(left), std::move(right), std::move(rho), std::move(mu)};
}

CheckReport read_report(const Source &s) {
  const Node n = root_node(s);
  expect_type(n, "report");
  return report_at(n.opt("report") ? n.at("report") : n);
}

Json matrix_json(const Mat &m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c)
      row.push_back(rat_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json matrix_list_json(const std::vector<Mat> &ms) {
  Json j;
  j["type"] = "matrix-list";
  j["matrices"] = Json::array();
  for (const Mat &m : ms)
    j["matrices"].push_back(matrix_json(m));
  return j;
}

Json to_json(const Algebra3 &a) {
  const std::size_t n = a.dim();
  const Tensor4 &c = a.structure();
  Json rows = Json::array();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          const Rat &v = c(i, j, k, l);
          const bool alternating =
              i < j && j < k
                  ? c(j, k, i, l) == v && c(k, i, j, l) == v && c(j, i, k, l) == -v &&
                        c(i, k, j, l) == -v && c(k, j, i, l) == -v
                  : (i != j && j != k && i != k) || is_zero(v);
          if (!alternating)
            throw PreconditionError("cannot serialize " + a.label() +
                                    ": the bracket is not alternating");
          if (i < j && j < k && !is_zero(v))
            rows.push_back(Json::array({i + 1, j + 1, k + 1, l + 1, rat_json(v)}));
        }
  Json j;
  j["type"] = "algebra";
  put_meta(j, a.label(), a.basis_names());
  j["dim"] = n;
  j["bracket"] = std::move(rows);
  j["twist"] = matrix_json(a.twist());
  return j;
}

Json to_json(const Rep3 &r) {
  if (!skew_slices(r.rho()))
    throw PreconditionError("cannot serialize a representation whose rho is not skew");
  Json j;
  j["type"] = "rep";
  j["algebra"] = to_json(r.base());
  j["vdim"] = r.vdim();
  j["rho"] = slice_rows_json(r.rho(), true);
  j["A"] = matrix_json(r.carrier_twist());
  return j;
}

Json to_json(const PreLie3 &p) {
  const std::size_t n = p.dim();
  const Tensor4 &t = p.product();
  Json rows = Json::array();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          const Rat &v = t(i, j, k, l);
          if (t(j, i, k, l) != -v)
            throw PreconditionError("cannot serialize " + p.label() +
                                    ": the product is not skew in its first two slots");
          if (i < j && !is_zero(v))
            rows.push_back(Json::array({i + 1, j + 1, k + 1, l + 1, rat_json(v)}));
        }
  Json j;
  j["type"] = "prelie";
  put_meta(j, p.label(), p.basis_names());
  j["dim"] = n;
  j["bracket"] = std::move(rows);
  j["twist"] = matrix_json(p.twist());
  return j;
}

Json to_json(const PreLieRep &r) {
  if (!skew_slices(r.rho()))
    throw PreconditionError("cannot serialize a pre-Lie representation whose rho is not skew");
  Json j;
  j["type"] = "prelie-rep";
  j["prelie"] = to_json(r.base());
  j["vdim"] = r.vdim();
  j["rho"] = slice_rows_json(r.rho(), true);
  j["mu"] = slice_rows_json(r.mu(), false);
  j["B"] = matrix_json(r.carrier_twist());
  return j;
}

Json to_json(const Cobracket &c) {
  const std::size_t n = c.base().dim();
  Json rows = Json::array();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l)
        for (std::size_t k = 0; k < n; ++k)
          if (const Rat &v = c.delta()(i, j, l, k); !is_zero(v))
            rows.push_back(Json::array({i + 1, j + 1, l + 1, k + 1, rat_json(v)}));
  Json j;
  j["type"] = "cobracket";
  j["algebra"] = to_json(c.base());
  j["delta"] = std::move(rows);
  return j;
}

Json to_json(const RTensor &r) {
  Json j;
  j["type"] = "r-matrix";
  j["algebra"] = to_json(r.base());
  j["r"] = matrix_json(r.entries());
  return j;
}

Json to_json(const BilForm &f) {
  Json j;
  j["type"] = "form";
  j["kind"] = to_string(f.kind());
  j["matrix"] = matrix_json(f.matrix());
  return j;
}

Json to_json(const OOperator &o) {
  Json j;
  j["type"] = "o-operator";
  j["rep"] = to_json(o.rep);
  j["T"] = matrix_json(o.map);
  return j;
}

Json to_json(const MatchedPairData &m) {
  Json j;
  j["type"] = "matched-pair";
  j["rho"] = to_json(m.rho);
  j["mu"] = to_json(m.mu);
  return j;
}

Json to_json(const CheckReport &r) {
  Json j;
  j["name"] = r.name;
  j["passed"] = r.passed;
  j["checked"] = r.checked;
  if (r.witness) {
    Json w;
    w["clause"] = r.witness->clause;
    Json tuple = Json::array();
    for (std::size_t i : r.witness->tuple)
      tuple.push_back(i + 1);
    w["tuple"] = std::move(tuple);
    w["lhs"] = r.witness->lhs;
    w["rhs"] = r.witness->rhs;
    j["witness"] = std::move(w);
  } else {
    j["witness"] = nullptr;
  }
  j["notes"] = r.notes;
  j["parts"] = Json::array();
  for (const CheckReport &p : r.parts)
    j["parts"].push_back(to_json(p));
  return j;
}

std::string dump(const Json &j) {
  std::string out;
  dump_into(j, 0, out);
  out += '\n';
  return out;
}

void write_file(const std::filesystem::path &path, const std::string &text) {
  if (path.has_parent_path())
    std::filesystem::create_directories(path.parent_path());
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out)
      throw InputError(path.string() + ": cannot write file");
    out << text;
    if (!out.flush())
      throw InputError(path.string() + ": write failed");
  }
  std::filesystem::rename(tmp, path);
}

} // namespace hom3::io
