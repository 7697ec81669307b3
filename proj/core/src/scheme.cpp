// Copyright 2026 The ddsynth Authors
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

#include "ddsynth/scheme.hpp"

#include <sstream>
#include <stdexcept>

#include "ddsynth/fixtures.hpp"
#include "ddsynth/hamiltonian.hpp"

namespace ddsynth {

OrderingPolicy parse_ordering_policy(std::string_view name) {
    if (name == "lexicographic") {
        return OrderingPolicy::Lexicographic;
    }
    if (name == "paper") {
        return OrderingPolicy::Paper;
    }
    throw std::invalid_argument("unknown ordering policy '" + std::string(name) + "'");
}

std::vector<PauliString> derive_pulses(const std::vector<PauliString> &order) {
    std::vector<PauliString> pulses;
    if (order.empty()) {
        return pulses;
    }
    pulses.reserve(order.size() + 1);
    pulses.push_back(order.front().basis());
    for (size_t k = 1; k < order.size(); ++k) {
        pulses.push_back(product(order[k], adjoint(order[k - 1])).basis());
    }
    pulses.push_back(adjoint(order.back()).basis());
    return pulses;
}

std::vector<PauliString> accumulate_frames(const std::vector<PauliString> &pulses) {
    std::vector<PauliString> frames;
    frames.reserve(pulses.size());
    for (const auto &p : pulses) {
        frames.push_back(frames.empty() ? p : product(p, frames.back()));
    }
    return frames;
}

namespace {

CountVector counts_of(const std::vector<PauliString> &order, const Rational &scaling) {
    CountVector c;
    c.dim = order.front().dim();
    c.num_sites = order.front().num_sites();
    for (const auto &g : order) {
        ++c.counts[basis_index(g)];
    }
    c.length = order.size();
    c.scaling = scaling;
    return c;
}

const std::vector<DecouplingScheme> &printed_schemes() {
    static const std::vector<DecouplingScheme> schemes = [] {
        std::vector<DecouplingScheme> out;
        for (const auto &f : reference_fixtures()) {
            out.push_back(parse_scheme(f.scheme));
        }
        return out;
    }();
    return schemes;
}

}  // namespace

DecouplingScheme scheme_from_order(std::vector<PauliString> order, Rational scaling) {
    if (order.empty()) {
        throw std::invalid_argument("a decoupling scheme needs at least one frame");
    }
    for (auto &g : order) {
        if (g.dim() != order.front().dim() || g.num_sites() != order.front().num_sites()) {
            throw std::invalid_argument("frames of a scheme must share dim and site count");
        }
        g = g.basis();
    }
    DecouplingScheme s;
    s.dim = order.front().dim();
    s.num_sites = order.front().num_sites();
    s.counts = counts_of(order, scaling);
    s.pulses = derive_pulses(order);
    s.order = std::move(order);
    s.scaling = std::move(scaling);
    return s;
}

DecouplingScheme materialize(const CountVector &counts, OrderingPolicy policy) {
    if (counts.counts.empty() || counts.length == 0) {
        throw std::invalid_argument("cannot materialize empty counts");
    }
    if (policy == OrderingPolicy::Paper) {
        for (const auto &printed : printed_schemes()) {
            if (printed.dim == counts.dim && printed.num_sites == counts.num_sites &&
                printed.counts.counts == counts.counts) {
                DecouplingScheme s = scheme_from_order(printed.order, counts.scaling);
                s.counts = counts;
                return s;
            }
        }
    }
    std::vector<PauliString> order;
    order.reserve(counts.length);
    for (const auto &[column, c] : counts.counts) {
        const PauliString g = basis_from_index(column, counts.dim, counts.num_sites);
        for (std::uint64_t i = 0; i < c; ++i) {
            order.push_back(g);
        }
    }
    DecouplingScheme s = scheme_from_order(std::move(order), counts.scaling);
    s.counts = counts;
    return s;
}

std::string serialize_scheme(const DecouplingScheme &scheme) {
    std::ostringstream out;
    out << "dim " << scheme.dim << "\n";
    out << "sites " << scheme.num_sites << "\n";
    out << "scaling " << to_fraction_string(scheme.scaling) << "\n";
    out << "length " << scheme.length() << "\n";
    for (size_t site = 0; site < scheme.num_sites; ++site) {
        for (size_t col = 0; col < scheme.order.size(); ++col) {
            if (col) {
                out << ' ';
            }
            const SpinLabel l = scheme.order[col][site];
            if (scheme.dim == 2) {
                out << qubit_pauli_index(l);
            } else {
                out << l.j << '.' << l.k;
            }
        }
        out << "\n";
    }
    return out.str();
}

namespace {

std::vector<std::string> words_of(std::string_view line) {
    std::vector<std::string> words;
    std::istringstream in{std::string(line)};
    std::string w;
    while (in >> w) {
        words.push_back(w);
    }
    return words;
}

long parse_count(const std::string &text, size_t line) {
    auto q = parse_exact_rational(text);
    if (!q || denominator(*q) != 1 || *q < 0 || *q > 1000000000) {
        throw ParseError("expected a non-negative integer, got '" + text + "'", line);
    }
    return numerator(*q).convert_to<long>();
}

}  // namespace

DecouplingScheme parse_scheme(std::string_view text) {
    long dim = -1;
    long sites = -1;
    long length = -1;
    Rational scaling{1};
    std::vector<std::vector<std::string>> rows;
    std::vector<size_t> row_lines;

    size_t pos = 0;
    size_t line_no = 0;
    while (pos <= text.size()) {
        size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        auto words = words_of(line);
        if (words.empty()) {
            continue;
        }
        const std::string &key = words[0];
        if (key == "dim" || key == "sites" || key == "length" || key == "scaling") {
            if (!rows.empty()) {
                throw ParseError("header line after label rows", line_no);
            }
            if (words.size() != 2) {
                throw ParseError("expected '" + key + " <value>'", line_no);
            }
            if (key == "scaling") {
                auto q = parse_exact_rational(words[1]);
                if (!q || *q <= 0) {
                    throw ParseError("scaling must be a positive rational p/q", line_no);
                }
                scaling = *q;
            } else {
                long v = parse_count(words[1], line_no);
                (key == "dim" ? dim : key == "sites" ? sites : length) = v;
            }
            continue;
        }
        rows.push_back(std::move(words));
        row_lines.push_back(line_no);
    }

    if (dim < 2 || dim > 64) {
        throw ParseError("missing or invalid 'dim' header");
    }
    if (sites < 1 || sites > 64) {
        throw ParseError("missing or invalid 'sites' header");
    }
    if (rows.size() != static_cast<size_t>(sites)) {
        throw ParseError("expected " + std::to_string(sites) + " label rows, found " + std::to_string(rows.size()));
    }
    const size_t m = rows.front().size();
    if (m == 0) {
        throw ParseError("scheme has no columns");
    }
    for (size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m) {
            throw ParseError("ragged rows: expected " + std::to_string(m) + " labels, found " +
                                 std::to_string(rows[i].size()),
                             row_lines[i]);
        }
    }
    if (length >= 0 && static_cast<size_t>(length) != m) {
        throw ParseError("length header says " + std::to_string(length) + " but rows have " + std::to_string(m) +
                         " columns");
    }

    std::vector<PauliString> order;
    order.reserve(m);
    const int d = static_cast<int>(dim);
    for (size_t col = 0; col < m; ++col) {
        std::vector<SpinLabel> labels;
        for (size_t site = 0; site < rows.size(); ++site) {
            const std::string &token = rows[site][col];
            try {
                PauliString single = parse_pauli_string(token, d);
                if (single.num_sites() != 1 || single.phase().value() != 0) {
                    throw std::invalid_argument("'" + token + "' is not a single-site label");
                }
                labels.push_back(single[0]);
            } catch (const std::invalid_argument &e) {
                throw ParseError(e.what(), row_lines[site]);
            }
        }
        order.emplace_back(d, std::move(labels));
    }
    return scheme_from_order(std::move(order), scaling);
}

}  // namespace ddsynth
