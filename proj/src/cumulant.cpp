#include "graphfp/cumulant.hpp"

#include "graphfp/errors.hpp"

namespace graphfp {

namespace {

bool blocks_balanced(const NoncrossingPartition& pi, const std::vector<Letter>& letters) {
  for (const auto& block : pi.blocks()) {
    int h = 0;
    for (int p : block) {
      h += letter_height(letters[p - 1]);
    }
    if (h != 0) {
      return false;
    }
  }
  return true;
}

DiagonalElement eval_block(const DirectedGraph& g, const std::vector<Letter>& letters,
                           const std::vector<int>& members,
                           const std::vector<std::optional<DiagonalElement>>& gates, EMode mode) {
  bool rebalance = mode == EMode::Paper;
  Element acc = letter_element(g, letters[members[0] - 1]);
  if (rebalance) {
    acc = collapse_balanced(g, acc);
  }
  for (std::size_t i = 1; i < members.size() && !acc.is_zero(); ++i) {
    if (gates[i - 1]) {
      acc = multiply(g, acc, gates[i - 1]->embed());
      if (rebalance) {
        acc = collapse_balanced(g, acc);
      }
    }
    acc = multiply(g, acc, letter_element(g, letters[members[i] - 1]));
    if (rebalance) {
      acc = collapse_balanced(g, acc);
    }
  }
  return expectation(g, acc, mode);
}

DiagonalElement nested_expectation_impl(const DirectedGraph& g, const NoncrossingPartition& pi,
                                        const NestingForest& forest,
                                        const std::vector<Letter>& letters, EMode mode) {
  int nb = pi.block_count();
  std::vector<DiagonalElement> value(nb);
  // Blocks are ordered by minimum, so children always follow their parent.
  for (int b = nb - 1; b >= 0; --b) {
    const auto& mem = pi.blocks()[b];
    std::vector<std::optional<DiagonalElement>> gates(mem.empty() ? 0 : mem.size() - 1);
    for (std::size_t gi = 0; gi + 1 < mem.size(); ++gi) {
      const auto& kids = forest.children_by_gap[b][gi];
      if (kids.empty()) {
        continue;
      }
      DiagonalElement d = value[kids[0]];
      for (std::size_t k = 1; k < kids.size(); ++k) {
        d = d.pointwise(value[kids[k]]);
      }
      gates[gi] = std::move(d);
    }
    value[b] = eval_block(g, letters, mem, gates, mode);
  }
  DiagonalElement out = value[forest.roots[0]];
  for (std::size_t r = 1; r < forest.roots.size(); ++r) {
    out = out.pointwise(value[forest.roots[r]]);
  }
  return out;
}

int total_height(const std::vector<Letter>& letters) {
  int h = 0;
  for (const auto& l : letters) {
    h += letter_height(l);
  }
  return h;
}

}  // namespace

DiagonalElement nested_expectation(const DirectedGraph& g, const NoncrossingPartition& pi,
                                   const std::vector<Letter>& letters, EMode mode) {
  if (pi.n() != static_cast<int>(letters.size())) {
    throw ValidationError("partition size does not match the letter count");
  }
  NestingForest forest = build_nesting(pi);
  return nested_expectation_impl(g, pi, forest, letters, mode);
}

CumulantEvaluator::CumulantEvaluator(const DirectedGraph& g, int n, EMode mode, int bound)
    : g_(g), n_(n), mode_(mode) {
  if (n < 1) {
    throw ValidationError("cumulant order must be at least 1");
  }
  parts_ = enumerate_nc(n, NcFilter::All, bound);
  mu_ = mu_to_top(n, bound);
  forests_.reserve(parts_.size());
  for (const auto& pi : parts_) {
    forests_.push_back(build_nesting(pi));
  }
}

DiagonalElement CumulantEvaluator::evaluate(const std::vector<Letter>& letters, int* contributing,
                                            std::int64_t* mu_sum) const {
  if (static_cast<int>(letters.size()) != n_) {
    throw ValidationError("letter count does not match the evaluator order");
  }
  DiagonalElement total;
  if (contributing) {
    *contributing = 0;
  }
  if (mu_sum) {
    *mu_sum = 0;
  }
  if (total_height(letters) != 0) {
    return total;  // every block-balanced partition is ruled out
  }
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (!blocks_balanced(parts_[i], letters)) {
      continue;
    }
    DiagonalElement val = nested_expectation_impl(g_, parts_[i], forests_[i], letters, mode_);
    if (val.is_zero()) {
      continue;
    }
    if (contributing) {
      ++*contributing;
    }
    if (mu_sum) {
      *mu_sum += mu_[i];
    }
    total += val.scaled(Coeff(static_cast<long long>(mu_[i])));
  }
  return total;
}

LetterCumulant cumulant_letters(const DirectedGraph& g, const std::vector<Letter>& letters,
                                EMode mode, int bound) {
  if (letters.empty()) {
    throw ValidationError("cumulant needs at least one letter");
  }
  CumulantEvaluator eval(g, static_cast<int>(letters.size()), mode, bound);
  LetterCumulant out;
  // Factored form: the connected-partition mu sum times the expectation of the
  // full word. This agrees with the Moebius sum of nested evaluations whenever
  // the word has nonzero expectation, and defines the letter-word cumulant.
  eval.evaluate(letters, &out.contributing, &out.mu_sum);
  out.value = word_expectation(g, letters, mode).scaled(Coeff(Rational(out.mu_sum)));
  return out;
}

DiagonalElement cumulant(const DirectedGraph& g, const std::vector<Element>& args, EMode mode,
                         int bound) {
  if (args.empty()) {
    throw ValidationError("cumulant needs at least one argument");
  }
  int n = static_cast<int>(args.size());
  std::vector<std::vector<std::pair<Letter, Coeff>>> dec;
  for (const auto& a : args) {
    dec.push_back(decompose_letters(g, a));
    if (dec.back().empty()) {
      return {};
    }
  }
  CumulantEvaluator eval(g, n, mode, bound);
  DiagonalElement total;
  std::vector<std::size_t> pick(n, 0);
  std::vector<Letter> letters(n);
  while (true) {
    Coeff weight(1);
    for (int i = 0; i < n; ++i) {
      const auto& [l, c] = dec[i][pick[i]];
      letters[i] = l;
      weight = weight * c;
    }
    DiagonalElement val = eval.evaluate(letters);
    if (!val.is_zero()) {
      total += val.scaled(weight);
    }
    int i = 0;
    while (i < n) {
      if (++pick[i] < dec[i].size()) {
        break;
      }
      pick[i] = 0;
      ++i;
    }
    if (i == n) {
      break;
    }
  }
  return total;
}

DiagonalElement moment(const DirectedGraph& g, const std::vector<Element>& args, EMode mode) {
  if (args.empty()) {
    throw ValidationError("moment needs at least one argument");
  }
  Element acc = args[0];
  for (std::size_t i = 1; i < args.size() && !acc.is_zero(); ++i) {
    acc = multiply(g, acc, args[i]);
  }
  return expectation(g, acc, mode);
}

Coeff moments_from_cumulants(const std::map<int, Coeff>& block_values, int n, int bound) {
  if (n < 1) {
    throw ValidationError("moment order must be at least 1");
  }
  std::set<int> sizes;
  for (const auto& [k, v] : block_values) {
    if (k < 1) {
      throw ValidationError("block sizes must be at least 1");
    }
    if (!v.is_zero()) {
      sizes.insert(k);
    }
  }
  Coeff total;
  if (sizes.empty()) {
    return total;
  }
  for (const auto& pi : enumerate_nc_sizes(n, sizes, bound)) {
    Coeff prod(1);
    for (const auto& block : pi.blocks()) {
      prod = prod * block_values.at(static_cast<int>(block.size()));
    }
    total += prod;
  }
  return total;
}

MuCoefficient mu_coefficient(int n, int bound) {
  if (n < 1) {
    throw ValidationError("order must be at least 1");
  }
  MuCoefficient out;
  if (n % 2 != 0) {
    return out;
  }
  NoncrossingPartition top = NoncrossingPartition::full(n);
  for (const auto& pi : enumerate_nc(n, NcFilter::EvenBlocks, bound)) {
    bool balanced = true;
    for (const auto& block : pi.blocks()) {
      int odd = 0;
      for (int p : block) {
        odd += p % 2;
      }
      if (2 * odd != static_cast<int>(block.size())) {
        balanced = false;
        break;
      }
    }
    if (!balanced) {
      continue;
    }
    ++out.connected_set_size;
    out.mu += mobius(pi, top, bound);
  }
  return out;
}

std::optional<Coeff> central_scalar(const DirectedGraph& g, const DiagonalElement& d) {
  Coeff first = d.at(0);
  for (int v = 1; v < g.vertex_count(); ++v) {
    if (!(d.at(v) == first)) {
      return std::nullopt;
    }
  }
  return first;
}

}  // namespace graphfp
