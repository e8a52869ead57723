// Copyright 2026 The commconf Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "commconf/free_group.hpp"

#include <algorithm>
#include <sstream>

#include "commconf/errors.hpp"

namespace commconf {

Word parse_word(std::string_view text, const std::vector<std::string>& labels) {
  Word w;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) {
    int exponent = 1;
    if (const auto caret = tok.find('^'); caret != std::string::npos) {
      const std::string exp = tok.substr(caret + 1);
      if (exp == "-1")
        exponent = -1;
      else if (exp != "1")
        throw MalformedWord("bad exponent in letter '" + tok + "'");
      tok.resize(caret);
    }
    const auto it = std::find(labels.begin(), labels.end(), tok);
    if (it == labels.end()) throw MalformedWord("unknown generator '" + tok + "' in word '" + std::string(text) + "'");
    w.push_back({static_cast<std::size_t>(it - labels.begin()), exponent});
  }
  return w;
}

Word inverse(const Word& w) {
  Word out;
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back({it->generator, -it->exponent});
  return out;
}

Word concat(const Word& x, const Word& y) {
  Word out = x;
  out.insert(out.end(), y.begin(), y.end());
  return out;
}

Word commutator(const Word& x, const Word& y) { return concat(concat(x, y), concat(inverse(x), inverse(y))); }

QVector exponent_sum(const Word& w, std::size_t generator_count) {
  QVector v(generator_count);
  for (const auto& l : w) {
    if (l.generator >= generator_count) throw MalformedWord("letter outside the generator set");
    v[l.generator] += l.exponent;
  }
  return v;
}

QMatrix relator_matrix(const GroupPresentation& p) {
  std::vector<QVector> rows;
  for (const auto& r : p.relators) rows.push_back(exponent_sum(r, p.generators.size()));
  return QMatrix::from_rows(rows, p.generators.size());
}

QMatrix abelianized_matrix(const WordAction& w, std::string_view outer) {
  const auto it = w.images.find(std::string(outer));
  if (it == w.images.end()) throw MalformedWord("no action recorded for '" + std::string(outer) + "'");
  const std::size_t n = w.generators.size();
  if (it->second.size() != n) throw MalformedWord("action of '" + std::string(outer) + "' needs one word per generator");
  QMatrix m(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    const QVector col = exponent_sum(parse_word(it->second[j], w.generators), n);
    for (std::size_t i = 0; i < n; ++i) m(i, j) = col[i];
  }
  return m;
}

namespace {

void check_module(const FreeGroupModule& m) {
  const std::size_t n = m.dim();
  if (!m.a.is_square() || !m.b.is_square() || m.b.rows() != n)
    throw InvariantViolation("free-group module: actions must be square of equal size");
  try {
    m.a.inverse();
    m.b.inverse();
  } catch (const Singular&) {
    throw InvariantViolation("free-group module: generator actions must be invertible");
  }
  if (m.involution) {
    const QMatrix& al = *m.involution;
    if (al.rows() != n || !al.is_square()) throw InvariantViolation("involution of wrong size");
    if (!(al * al == QMatrix::identity(n))) throw InvariantViolation("involution does not square to the identity");
    if (!(al * m.a == m.b * al)) throw InvariantViolation("involution does not intertwine the a- and b-actions");
  }
}

}  // namespace

FreeGroupH1 h1_f2(const FreeGroupModule& module) {
  check_module(module);
  const std::size_t n = module.dim();
  const QMatrix id = QMatrix::identity(n);
  const QMatrix da = module.a - id;
  const QMatrix db = module.b - id;
  std::vector<QVector> relations;
  for (std::size_t j = 0; j < n; ++j) {
    QVector v(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
      v[i] = da(i, j);
      v[n + i] = db(i, j);
    }
    relations.push_back(std::move(v));
  }

  // (m, n) -> (alpha n, alpha m); the identity when no involution is given.
  QMatrix doubled = QMatrix::identity(2 * n);
  if (module.involution) {
    doubled = QMatrix(2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        doubled(i, n + j) = (*module.involution)(i, j);
        doubled(n + i, j) = (*module.involution)(i, j);
      }
  }
  const QuotientAction q = quotient_action(doubled, relations);

  FreeGroupH1 out;
  out.dim = q.surviving.size();
  out.surviving = q.surviving;
  if (module.basis_labels.size() == n)
    for (auto s : q.surviving)
      out.surviving_labels.push_back(s < n ? module.basis_labels[s] : module.basis_labels[s - n] + "'");
  if (module.involution) out.involution = q.matrix;
  return out;
}

std::size_t h1_f2_euler_dim(const FreeGroupModule& module) {
  check_module(module);
  const std::size_t n = module.dim();
  const QMatrix id = QMatrix::identity(n);
  std::vector<QVector> rows;
  const QMatrix da = module.a - id;
  const QMatrix db = module.b - id;
  for (std::size_t i = 0; i < n; ++i) {
    QVector ra(n), rb(n);
    for (std::size_t j = 0; j < n; ++j) {
      ra[j] = da(i, j);
      rb[j] = db(i, j);
    }
    rows.push_back(std::move(ra));
    rows.push_back(std::move(rb));
  }
  return n + kernel_basis(QMatrix::from_rows(rows, n)).size();
}

}  // namespace commconf
