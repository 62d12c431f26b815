#include "primestep/serialize.hpp"

#include <ostream>

namespace primestep {

namespace {

constexpr ResidueClass kClasses[] = {ResidueClass::OMinus, ResidueClass::OPlus};

struct Row {
  ResidueClass cls;
  Int gamma;
  bool is_prime;
  std::size_t piece;
};

template <class F>
void for_each_row(const StepState& state, bool all_rows, F&& emit) {
  for (ResidueClass c : kClasses) {
    const auto& primes = state.primes(c);
    const auto& pieces = state.pieces(c);
    auto it = primes.begin();
    for (std::size_t k = 0; k < pieces.size(); ++k) {
      for (Int g = pieces[k].range.lo; g <= pieces[k].range.hi; ++g) {
        bool prime = it != primes.end() && *it == g;
        if (prime) ++it;
        if (prime || all_rows) emit(Row{c, g, prime, k});
      }
    }
  }
}

}  // namespace

std::string format_runs(const std::vector<Int>& sorted) {
  if (sorted.empty()) return "-";
  std::string out;
  std::size_t i = 0;
  while (i < sorted.size()) {
    std::size_t j = i;
    while (j + 1 < sorted.size() && sorted[j + 1] == sorted[j] + 1) ++j;
    if (!out.empty()) out += ',';
    out += std::to_string(sorted[i]);
    if (j > i) out += '-' + std::to_string(sorted[j]);
    i = j + 1;
  }
  return out;
}

void write_state_text(std::ostream& os, const StepState& state) {
  os << "state step=" << state.step << " r_minus=" << state.bounds.r_minus << " r_plus=" << state.bounds.r_plus
     << '\n';
  for (ResidueClass c : kClasses) {
    const auto& pieces = state.pieces(c);
    for (std::size_t k = 0; k < pieces.size(); ++k) {
      const Piece& p = pieces[k];
      const auto& factors = p.constraint->factors();
      os << "piece class=" << to_string(c) << " index=" << k << " step=" << p.step << " lo=" << p.range.lo
         << " hi=" << p.range.hi << " families=" << p.family_count << " factors=" << factors.size() << '\n';
      for (const auto& f : factors) {
        os << "  factor modulus=" << f.modulus() << " allowed=" << format_runs(f.allowed())
           << " add=" << format_runs(f.exceptions_add()) << " remove=" << format_runs(f.exceptions_remove())
           << '\n';
      }
    }
  }
}

void write_rows_csv(std::ostream& os, const StepState& state, bool all_rows) {
  os << "step,class,gamma,value,is_prime,piece_index\n";
  for_each_row(state, all_rows, [&](const Row& r) {
    os << state.step << ',' << to_string(r.cls) << ',' << r.gamma << ',' << value(r.cls, r.gamma) << ','
       << (r.is_prime ? 1 : 0) << ',' << r.piece << '\n';
  });
}

nlohmann::json state_to_json(const StepState& state, bool all_rows) {
  using nlohmann::json;
  json pieces = json::array();
  for (ResidueClass c : kClasses) {
    const auto& list = state.pieces(c);
    for (std::size_t k = 0; k < list.size(); ++k) {
      const Piece& p = list[k];
      json factors = json::array();
      for (const auto& f : p.constraint->factors()) {
        factors.push_back({{"modulus", f.modulus()},
                           {"allowed", f.allowed()},
                           {"exceptions_add", f.exceptions_add()},
                           {"exceptions_remove", f.exceptions_remove()}});
      }
      pieces.push_back({{"class", to_string(c)},
                        {"index", k},
                        {"step", p.step},
                        {"lo", p.range.lo},
                        {"hi", p.range.hi},
                        {"families", p.family_count},
                        {"factors", std::move(factors)}});
    }
  }
  json rows = json::array();
  for_each_row(state, all_rows, [&](const Row& r) {
    rows.push_back({{"step", state.step},
                    {"class", to_string(r.cls)},
                    {"gamma", r.gamma},
                    {"value", value(r.cls, r.gamma)},
                    {"is_prime", r.is_prime},
                    {"piece_index", r.piece}});
  });
  return {{"schema", 1},
          {"step", state.step},
          {"bounds", {{"r_minus", state.bounds.r_minus}, {"r_plus", state.bounds.r_plus}}},
          {"pieces", std::move(pieces)},
          {"rows", std::move(rows)}};
}

}  // namespace primestep
