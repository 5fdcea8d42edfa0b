#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "wtab/barbasch_vogan.hpp"
#include "wtab/classifier.hpp"
#include "wtab/component_group.hpp"
#include "wtab/oracle.hpp"
#include "wtab/rowops.hpp"
#include "wtab/schensted.hpp"
#include "wtab/table_io.hpp"

namespace {

using nlohmann::json;
using namespace wtab;

constexpr int kExitFalse = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;

std::string slurp(const std::string& path) {
    if (path.empty() || path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) fail(ErrorKind::ParseError, "cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

HalfInt parse_value(const std::string& tok) {
    size_t slash = tok.find('/');
    try {
        if (slash == std::string::npos) return HalfInt(std::stoi(tok));
        if (tok.substr(slash + 1) != "2") fail(ErrorKind::ParseError, "denominator must be 2: " + tok);
        return HalfInt::from_twice(std::stoi(tok.substr(0, slash)));
    } catch (const std::invalid_argument&) {
        fail(ErrorKind::ParseError, "bad value: " + tok);
    } catch (const std::out_of_range&) {
        fail(ErrorKind::ParseError, "value out of range: " + tok);
    }
}

std::vector<HalfInt> parse_values(const std::string& csv) {
    std::vector<HalfInt> out;
    std::istringstream in(csv);
    std::string tok;
    while (std::getline(in, tok, ','))
        if (!tok.empty()) out.push_back(parse_value(tok));
    if (out.empty()) fail(ErrorKind::ParseError, "empty value list");
    return out;
}

std::vector<int> parse_ints(const std::string& csv) {
    std::vector<int> out;
    for (HalfInt v : parse_values(csv)) {
        if (!v.is_integral()) fail(ErrorKind::ParseError, "expected integers: " + csv);
        out.push_back(v.t / 2);
    }
    return out;
}

std::string join(const std::vector<int>& xs, const std::string& sep = ",") {
    std::string out;
    for (size_t i = 0; i < xs.size(); ++i) {
        if (i) out += sep;
        out += std::to_string(xs[i]);
    }
    return out;
}

json table_json(const STable& A, LieType lt, const Partition& p) {
    return json::parse(format_table(A, TableStyle::json, lt, p));
}

json record_of(const STable& A, LieType lt, const Partition& p, const ClassificationResult& res) {
    json rec;
    rec["table"] = table_json(A, lt, p);
    rec["finite_dimensional"] = res.finite_dimensional;
    rec["bv_partition"] = res.bv_partition.parts;
    if (res.witness)
        rec["witness_word"] = res.witness->word;
    else
        rec["witness_word"] = nullptr;
    rec["tags"] = json::array();
    return rec;
}

LieType type_of(const std::string& s) {
    if (s == "C" || s == "c") return LieType::C;
    if (s == "D" || s == "d") return LieType::D;
    fail(ErrorKind::ParseError, "type must be C or D, got " + s);
}

struct Common {
    std::string type;
    std::string table_file;
    std::string partition;
    std::string entries;
};

std::optional<LieType> hint_of(const std::string& s) {
    if (s.empty()) return std::nullopt;
    return type_of(s);
}

int run_rs(const std::string& word_csv) {
    Word w;
    w.values = parse_values(word_csv);
    Tableau t = rs(w);
    std::cout << "shape " << t.shape().str() << "\n";
    for (auto it = t.rows.rbegin(); it != t.rows.rend(); ++it) {
        std::string line;
        for (HalfInt v : *it) {
            if (!line.empty()) line += " ";
            line += v.str();
        }
        std::cout << line << "\n";
    }
    return 0;
}

int run_bv(const std::string& type, const std::string& weight_csv, bool trace) {
    Weight lambda{parse_values(weight_csv)};
    BvResult res = bv(lambda, type_of(type));
    std::cout << "partition " << res.partition.str() << "\n";
    if (res.very_even_ambiguous) std::cout << "orbit ambiguous (all parts even)\n";
    if (trace) {
        std::cout << "q " << res.trace.q.str() << "\n";
        std::cout << "r " << join(res.trace.r_list) << "\n";
        std::cout << "s " << join(res.trace.s_list) << "\n";
        std::cout << "t " << join(res.trace.t_list) << "\n";
        std::cout << "u " << join(res.trace.u) << "\n";
        std::cout << "s' " << join(res.trace.s_prime) << "\n";
        std::cout << "t' " << join(res.trace.t_prime) << "\n";
        std::cout << "r' " << join(res.trace.r_prime) << "\n";
        std::cout << "q' " << res.trace.q_prime.str() << "\n";
    }
    return 0;
}

int run_swap(const Common& c, int row) {
    ParsedTable pt = parse_table(slurp(c.table_file), hint_of(c.type));
    auto result = swap_rows_sym(pt.table, row);
    if (!result) {
        std::cerr << "swap " << row << " is undefined on this table\n";
        return kExitFalse;
    }
    std::cout << format_table(*result, TableStyle::json, pt.lt, pt.partition) << "\n";
    return 0;
}

int run_colstrict(const Common& c, bool sym) {
    std::string text = slurp(c.table_file);
    if (sym) {
        ParsedTable pt = parse_table(text, hint_of(c.type));
        auto found = find_column_strict_sym(pt.table);
        if (!found) {
            std::cerr << "no column-strict arrangement\n";
            return kExitFalse;
        }
        std::cout << format_table(*found, TableStyle::json, pt.lt, pt.partition) << "\n";
        return 0;
    }
    Table A = parse_plain_table(text);
    auto found = find_column_strict(A);
    if (!found) {
        std::cerr << "no column-strict arrangement\n";
        return kExitFalse;
    }
    std::cout << format_grid(*found);
    return 0;
}

int run_orbit(const Common& c) {
    ParsedTable pt = parse_table(slurp(c.table_file), hint_of(c.type));
    GeneratorSet gs = generator_set(pt.partition, pt.lt);
    Orbit orb = orbit(pt.table, gs);
    for (const OrbitElement& el : orb.elements) {
        json rec;
        rec["table"] = table_json(el.table, pt.lt, pt.partition);
        rec["word"] = el.word;
        json par = json::array();
        if (el.parity_even) par.push_back("even");
        if (el.parity_odd) par.push_back("odd");
        rec["parities"] = par;
        std::cout << rec.dump() << "\n";
    }
    for (const PrunedBranch& br : orb.pruned) {
        json rec;
        rec["pruned_from"] = br.from_key;
        rec["generator"] = br.generator;
        rec["reason"] = error_kind_name(br.reason);
        std::cout << rec.dump() << "\n";
    }
    return 0;
}

int run_classify(const Common& c) {
    ParsedTable pt = parse_table(slurp(c.table_file), hint_of(c.type));
    ClassificationResult res = classify(pt.table, pt.partition, pt.lt);
    std::cout << record_of(pt.table, pt.lt, pt.partition, res).dump() << "\n";
    return res.finite_dimensional ? 0 : kExitFalse;
}

int run_enumerate(const Common& c, bool only_finite, bool prim_ideals) {
    LieType lt = type_of(c.type);
    Partition p = make_partition(parse_ints(c.partition));
    CentralCharacter chi = parse_values(c.entries);
    std::sort(chi.begin(), chi.end());

    if (prim_ideals) {
        for (const PrimitiveIdealLabel& label : primitive_ideal_labels(p, chi, lt)) {
            ClassificationResult res = classify(label.table, p, lt);
            json rec = record_of(label.table, lt, p, res);
            rec["tags"] = json::array({label_tag_name(label.tag)});
            std::cout << rec.dump() << "\n";
        }
        return 0;
    }
    for (const STable& A : enumerate_tables(p, chi, lt)) {
        ClassificationResult res = classify(A, p, lt);
        if (only_finite && !res.finite_dimensional) continue;
        std::cout << record_of(A, lt, p, res).dump() << "\n";
    }
    return 0;
}

int run_oracle_fuzz(int count, unsigned seed, int max_len) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> len_dist(1, max_len);
    std::uniform_int_distribution<int> val_dist(-3, 3);
    for (int i = 0; i < count; ++i) {
        Word w;
        int len = len_dist(rng);
        for (int j = 0; j < len; ++j) w.values.push_back(HalfInt(val_dist(rng)));
        if (rs_shape(w) != oracle::brute_shape(w)) {
            std::string letters;
            for (HalfInt v : w.values) letters += v.str() + " ";
            std::cout << "MISMATCH " << letters << "\n";
            return kExitFalse;
        }
    }
    std::cout << "ok " << count << " words\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"pyramid table calculus: insertion shapes, row operations, and\n"
                 "finite-dimensionality of highest-weight labels"};
    app.require_subcommand(1);
    unsigned seed = 12345;

    Common c;
    std::string word_csv, weight_csv;
    int row = 1;
    bool trace = false, sym = false, only_finite = false, prim_ideals = false, jsonl = false;

    auto* cmd_rs = app.add_subcommand("rs", "insertion tableau and shape of a word");
    cmd_rs->add_option("--word", word_csv, "comma-separated letters")->required();

    auto* cmd_bv = app.add_subcommand("bv", "associated-variety partition of a weight");
    cmd_bv->add_option("--type", c.type, "C or D")->required();
    cmd_bv->add_option("--weight", weight_csv, "comma-separated coefficients")->required();
    cmd_bv->add_flag("--trace", trace, "print every intermediate list");

    auto* cmd_swap = app.add_subcommand("swap", "symmetric row swap on a table");
    cmd_swap->add_option("--row", row, "row index i for the swap at depth i")->required();
    cmd_swap->add_option("--table", c.table_file, "table file or - for stdin");
    cmd_swap->add_option("--type", c.type, "C or D when the file omits it");

    auto* cmd_col = app.add_subcommand("colstrict", "find a column-strict arrangement");
    cmd_col->add_option("--table", c.table_file, "table file or - for stdin");
    cmd_col->add_flag("--sym", sym, "search skew-symmetric arrangements");
    cmd_col->add_option("--type", c.type, "C or D when the file omits it");

    auto* cmd_orbit = app.add_subcommand("orbit", "generator orbit with parities");
    cmd_orbit->add_option("--table", c.table_file, "table file or - for stdin");
    cmd_orbit->add_option("--type", c.type, "C or D when the file omits it");

    auto* cmd_classify = app.add_subcommand("classify", "decide finite-dimensionality of a label");
    cmd_classify->add_option("--table", c.table_file, "table file or - for stdin");
    cmd_classify->add_option("--type", c.type, "C or D when the file omits it");

    auto* cmd_enum = app.add_subcommand("enumerate", "all labels for a partition and entry multiset");
    cmd_enum->add_option("--type", c.type, "C or D")->required();
    cmd_enum->add_option("--partition", c.partition, "comma-separated parts")->required();
    cmd_enum->add_option("--entries", c.entries, "comma-separated entry multiset")->required();
    cmd_enum->add_flag("--only-finite", only_finite, "keep finite-dimensional labels only");
    cmd_enum->add_flag("--prim-ideals", prim_ideals, "emit the labeled primitive-ideal sets");
    cmd_enum->add_flag("--jsonl", jsonl, "one json record per line (always on)");

    auto* cmd_oracle = app.add_subcommand("oracle", "brute-force reference checks");
    std::string list_csv;
    auto* o_shape = cmd_oracle->add_subcommand("shape", "exhaustive insertion shape");
    o_shape->add_option("--word", word_csv, "comma-separated letters")->required();
    auto* o_recs = cmd_oracle->add_subcommand("recs", "row-equivalent-to-column-strict test");
    o_recs->add_option("--table", c.table_file, "table file or - for stdin");
    auto* o_sharp = cmd_oracle->add_subcommand("sharp", "sharp element by full permutation search");
    o_sharp->add_option("--list", list_csv, "comma-separated values")->required();
    auto* o_bv2a = cmd_oracle->add_subcommand("bv2a", "list-surgery variant of the partition map");
    o_bv2a->add_option("--type", c.type, "C or D")->required();
    o_bv2a->add_option("--weight", weight_csv, "comma-separated coefficients")->required();
    int fuzz_count = 1000, fuzz_len = 8;
    auto* o_fuzz = cmd_oracle->add_subcommand("fuzz", "random words vs the exhaustive shape");
    o_fuzz->add_option("--count", fuzz_count, "number of words");
    o_fuzz->add_option("--max-len", fuzz_len, "maximum word length");
    o_fuzz->add_option("--seed", seed, "rng seed");
    cmd_oracle->require_subcommand(1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    (void)jsonl;
    try {
        if (*cmd_rs) return run_rs(word_csv);
        if (*cmd_bv) return run_bv(c.type, weight_csv, trace);
        if (*cmd_swap) return run_swap(c, row);
        if (*cmd_col) return run_colstrict(c, sym);
        if (*cmd_orbit) return run_orbit(c);
        if (*cmd_classify) return run_classify(c);
        if (*cmd_enum) return run_enumerate(c, only_finite, prim_ideals);
        if (*cmd_oracle) {
            if (*o_shape) {
                Word w;
                w.values = parse_values(word_csv);
                std::cout << "shape " << oracle::brute_shape(w).str() << "\n";
                return 0;
            }
            if (*o_recs) {
                Table A = parse_plain_table(slurp(c.table_file));
                bool ok = oracle::brute_recs(A);
                std::cout << (ok ? "true" : "false") << "\n";
                return ok ? 0 : kExitFalse;
            }
            if (*o_sharp) {
                auto sharp = oracle::brute_sharp(parse_values(list_csv));
                if (!sharp) {
                    std::cout << "undefined\n";
                    return kExitFalse;
                }
                std::cout << sharp->str() << "\n";
                return 0;
            }
            if (*o_bv2a) {
                Weight lambda{parse_values(weight_csv)};
                std::cout << "partition " << oracle::bv_with_step2a(lambda, type_of(c.type)).str()
                          << "\n";
                return 0;
            }
            if (*o_fuzz) return run_oracle_fuzz(fuzz_count, seed, fuzz_len);
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    }
    return kExitUsage;
}
