// treelab command line: counting, coding and verification for labelled
// trees grouped by their indegree partition.

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "treelab/census.hpp"
#include "treelab/codec.hpp"
#include "treelab/involution.hpp"
#include "treelab/lattice.hpp"
#include "treelab/model.hpp"
#include "treelab/omega.hpp"
#include "treelab/treemap.hpp"

using namespace treelab;
using nlohmann::json;

namespace {

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream in(path);
    if (!in) throw Error("cannot open file " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

SetPartition swap_in_partition(const SetPartition& pi, int i) {
    std::vector<std::vector<int>> blocks = pi.blocks();
    for (auto& block : blocks)
        for (auto& e : block) {
            if (e == i)
                e = i + 1;
            else if (e == i + 1)
                e = i;
        }
    return SetPartition(pi.ground_n(), std::move(blocks));
}

// ---------------------------------------------------------------------------
// verification suites

struct CheckRun {
    bool all_pass = true;
    json checks = json::array();
    bool use_json = false;

    void record(const std::string& name, bool pass, const std::string& detail = "") {
        all_pass &= pass;
        if (use_json) {
            json entry{{"name", name}, {"pass", pass}};
            if (!detail.empty()) entry["detail"] = detail;
            checks.push_back(entry);
        } else {
            std::cout << "  [" << (pass ? "PASS" : "FAIL") << "] " << name;
            if (!detail.empty()) std::cout << " (" << detail << ")";
            std::cout << "\n";
        }
    }
};

long long bell_number(int k) {
    BigInt b = 0;
    for (int j = 0; j <= k; ++j) b += stirling2(k, j);
    return b.convert_to<long long>();
}

void verify_lattice(int n, CheckRun& run) {
    auto lattice = all_partitions(n).to_vector();
    const int m = static_cast<int>(lattice.size());

    bool order_ok = true;
    std::vector<std::vector<bool>> le(m, std::vector<bool>(m));
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) le[a][b] = refines(lattice[a], lattice[b]);
    for (int a = 0; a < m && order_ok; ++a) {
        order_ok &= le[a][a];
        for (int b = 0; b < m && order_ok; ++b) {
            if (a != b && le[a][b] && le[b][a]) order_ok = false;
            if (!le[a][b]) continue;
            for (int c = 0; c < m; ++c)
                if (le[b][c] && !le[a][c]) order_ok = false;
        }
    }
    run.record("refinement is a partial order", order_ok,
               std::to_string(m) + " partitions");

    bool counts_ok = true;
    for (const SetPartition& sigma : lattice) {
        long long count = 0;
        for (const SetPartition& pi : coarsenings(sigma)) {
            (void)pi;
            ++count;
        }
        counts_ok &= count == bell_number(sigma.block_count());
        counts_ok &= static_cast<long long>(covers(sigma).size()) ==
                     1LL * sigma.block_count() * (sigma.block_count() - 1) / 2;
    }
    run.record("coarsening and cover counts", counts_ok);

    bool mobius_ok = true;
    for (const SetPartition& sigma : lattice) {
        BigInt sum = 0;
        for (const SetPartition& pi : coarsenings(sigma)) sum += mobius(sigma, pi);
        bool is_top = sigma.block_count() <= 1;
        mobius_ok &= is_top ? sum == 1 : sum == 0;
    }
    run.record("mobius interval sums vanish", mobius_ok);

    bool stirling_ok = true;
    for (int k = 1; k <= 8; ++k)
        for (int nn = 1; nn <= 12; ++nn) {
            auto [lhs, rhs] = stirling_identity_check(k, nn);
            stirling_ok &= lhs == rhs;
        }
    run.record("stirling identity, k <= 8, n <= 12", stirling_ok);
}

void verify_census(int n, CheckRun& run) {
    Census census = brute_force_census(n, std::max(n, kDefaultEnumerationBound));

    bool lambda_ok = true;
    BigInt total = 0;
    for (const auto& [lambda, count] : census.by_type) {
        lambda_ok &= count == count_trees_of_type(lambda);
        total += count;
    }
    lambda_ok &= census.by_type.size() == integer_partitions_of(n - 1).size();
    run.record("type census equals the closed form", lambda_ok,
               std::to_string(census.by_type.size()) + " types");

    BigInt cayley = n >= 2 ? ipow(n, n - 2) : 1;
    run.record("census total is the Cayley count", total == cayley, total.str() + " trees");

    bool pi_ok = true;
    for (const auto& [pi, count] : census.by_partition)
        pi_ok &= count == count_trees_with_partition(pi);
    run.record("partition census equals the closed form", pi_ok,
               std::to_string(census.by_partition.size()) + " partitions");

    bool upset_ok = true;
    for (const SetPartition& sigma : all_partitions(n)) {
        BigInt sum = 0;
        for (const SetPartition& pi : coarsenings(sigma)) {
            auto it = census.by_partition.find(pi);
            if (it != census.by_partition.end()) sum += it->second;
        }
        upset_ok &= sum == count_trees_coarser_than(sigma);
    }
    run.record("upset sums give powers of n", upset_ok);

    const int mobius_n = std::min(n, 6);
    bool mobius_ok = true;
    for (const auto& [pi, f] : fiber_counts_by_mobius(mobius_n))
        mobius_ok &= f == count_trees_with_partition(pi);
    run.record("mobius inversion solves the fiber counts", mobius_ok,
               "n = " + std::to_string(mobius_n));

    bool recursion_ok = true;
    if (n >= 3) {
        // Fiber sizes at n and n-1 come from the two censuses; the split of
        // each co-blocked fiber along the contraction must add up.
        Census down = brute_force_census(n - 1, std::max(n, kDefaultEnumerationBound));
        for (const SetPartition& pi : all_partitions(n)) {
            if (pi.block_index(n) != pi.block_index(n - 1)) continue;
            BigInt rhs = 0;
            for (const SetPartition& contracted : contracted_family(pi)) {
                auto it = down.by_partition.find(contracted);
                if (it != down.by_partition.end()) rhs += it->second;
            }
            recursion_ok &= census.by_partition.at(pi) == rhs;
        }
    }
    run.record("contraction recursion", recursion_ok);
}

void verify_codec(int n, CheckRun& run) {
    auto lattice = all_partitions(n).to_vector();
    std::map<SetPartition, std::vector<LabelledTree>> upsets;
    for_each_tree(n, [&](const LabelledTree& tree) {
        SetPartition pi = tree_partition(tree);
        for (const SetPartition& sigma : lattice)
            if (refines(sigma, pi)) upsets[sigma].push_back(tree);
    });

    bool bijection_ok = true;
    for (const SetPartition& sigma : lattice) {
        BigInt cube = count_trees_coarser_than(sigma);
        const auto& trees = upsets[sigma];
        bijection_ok &= BigInt(static_cast<int>(trees.size())) == cube;
        std::set<CodeWord> words;
        for (const LabelledTree& tree : trees) {
            CodeWord word = encode(sigma, tree);
            bijection_ok &= words.insert(word).second;
            bijection_ok &= decode(sigma, word) == tree;
        }
        bijection_ok &= BigInt(static_cast<int>(words.size())) == cube;
    }
    run.record("encode/decode is a bijection onto the cube", bijection_ok,
               std::to_string(lattice.size()) + " partitions");

    bool subseq_ok = true;
    for_each_tree(n, [&](const LabelledTree& tree) {
        SetPartition top = tree_partition(tree);
        std::vector<std::pair<SetPartition, CodeWord>> codes;
        for (const SetPartition& sigma : lattice)
            if (refines(sigma, top)) codes.push_back({sigma, encode(sigma, tree)});
        for (std::size_t a = 0; a < codes.size(); ++a)
            for (std::size_t b = 0; b < codes.size(); ++b) {
                if (a == b || !refines(codes[a].first, codes[b].first)) continue;
                subseq_ok &= is_subsequence(codes[b].second, codes[a].second);
            }
    });
    run.record("coarser codes embed in finer codes", subseq_ok);

    bool prufer_ok = true;
    std::set<LabelledTree> seen;
    long long total = 0;
    for_each_tree(n, [&](const LabelledTree& tree) {
        ++total;
        prufer_ok &= seen.insert(tree).second;
    });
    BigInt cayley = n >= 2 ? ipow(n, n - 2) : 1;
    prufer_ok &= BigInt(total) == cayley;
    run.record("Pruefer decoding is injective over the sequence space", prufer_ok);
}

void verify_involution(int n, CheckRun& run) {
    bool involution_ok = true, equivariance_ok = true, fixed_ok = true;
    for_each_tree(n, [&](const LabelledTree& tree) {
        SetPartition pi = tree_partition(tree);
        for (int i = 2; i + 1 <= n; ++i) {
            if (pi.block_index(i) == pi.block_index(i + 1)) continue;
            LabelledTree swapped = swap_adjacent_labels(tree, i);
            involution_ok &= swap_adjacent_labels(swapped, i) == tree;
            SetPartition expected = swap_in_partition(pi, i);
            equivariance_ok &= tree_partition(swapped) == expected;
            if (!(expected == pi)) fixed_ok &= !(swapped == tree);
        }
    });
    run.record("double swap is the identity", involution_ok);
    run.record("swap exchanges the two labels in the partition", equivariance_ok);
    run.record("no fixed points between distinct fibers", fixed_ok);

    bool sizes_ok = true;
    std::map<SetPartition, long long> fibers;
    for_each_tree(n, [&](const LabelledTree& tree) { ++fibers[tree_partition(tree)]; });
    for (const auto& [pi, size] : fibers) {
        for (int i = 2; i + 1 <= n; ++i) {
            if (pi.block_index(i) == pi.block_index(i + 1)) continue;
            sizes_ok &= fibers[swap_in_partition(pi, i)] == size;
        }
    }
    run.record("exchanged partitions have equal fiber sizes", sizes_ok);
}

void verify_omega(int n, CheckRun& run) {
    // One sweep over the tree space; every per-partition check reads from
    // these fibers instead of rescanning.
    std::map<SetPartition, std::vector<LabelledTree>> fibers;
    for_each_tree(n, [&](const LabelledTree& tree) {
        fibers[tree_partition(tree)].push_back(tree);
    });

    bool sizes_ok = true;
    std::map<SetPartition, std::set<CodeWord>> images;
    for (const auto& [pi, trees] : fibers) {
        std::set<CodeWord>& words = images[pi];
        for (const LabelledTree& tree : trees) words.insert(encode(pi, tree));
        sizes_ok &= BigInt(static_cast<int>(words.size())) ==
                    count_trees_with_partition(pi);
    }
    run.record("code set sizes equal the fiber counts", sizes_ok);

    bool cube_ok = true;
    for (const SetPartition& sigma : all_partitions(n)) {
        std::set<CodeWord> cube;
        BigInt total = 0;
        for (const SetPartition& pi : coarsenings(sigma)) {
            auto it = fibers.find(pi);
            if (it == fibers.end()) continue;
            for (const LabelledTree& tree : it->second) {
                cube_ok &= cube.insert(encode(sigma, tree)).second;  // disjoint images
                total += 1;
            }
        }
        cube_ok &= total == count_trees_coarser_than(sigma);
    }
    run.record("fiber images tile the cube", cube_ok);

    bool subseq_ok = true;
    for (const SetPartition& sigma : all_partitions(n)) {
        for (const SetPartition& above : covers(sigma)) {
            for (const SetPartition& pi : coarsenings(above)) {
                auto it = fibers.find(pi);
                if (it == fibers.end()) continue;
                for (const LabelledTree& tree : it->second)
                    subseq_ok &= is_subsequence(encode(above, tree), encode(sigma, tree));
            }
        }
    }
    run.record("subsequence relation over all covering pairs", subseq_ok);

    if (n >= 5) {
        SetPartition worked = parse_partition("4,5/3/2", 5);
        std::set<std::string> got;
        for (const CodeWord& w : fiber_code_set(worked)) got.insert(format_code(w));
        std::set<std::string> expected{"1,1", "1,2", "1,4", "2,1", "2,2", "2,4",
                                       "3,1", "3,2", "3,4", "4,1", "4,2", "4,3"};
        bool worked_ok = got == expected;
        worked_ok &= check_cube_partition(worked).pass;
        for (const SetPartition& above : covers(worked))
            worked_ok &= check_subsequence_property(worked, above).pass;
        run.record("worked 5-vertex code table", worked_ok);
    }
}

// ---------------------------------------------------------------------------
// subcommand implementations

int run_count(const std::string& lambda_text, const std::string& pi_text, int n,
              bool use_json) {
    BigInt result;
    if (!lambda_text.empty()) {
        result = count_trees_of_type(parse_type(lambda_text));
    } else {
        result = count_trees_with_partition(parse_partition(pi_text, n));
    }
    if (use_json)
        std::cout << json{{"count", result.str()}}.dump() << "\n";
    else
        std::cout << result << "\n";
    return 0;
}

int run_phi(const std::string& tree_path, bool use_json) {
    SetPartition pi = tree_partition(parse_tree(read_input(tree_path)));
    if (use_json)
        std::cout << partition_to_json(pi).dump() << "\n";
    else
        std::cout << format_partition(pi) << "\n";
    return 0;
}

int run_encode(const std::string& sigma_text, const std::string& tree_path, bool use_json) {
    LabelledTree tree = parse_tree(read_input(tree_path));
    SetPartition sigma = parse_partition(sigma_text, tree.vertex_count());
    CodeWord word = encode(sigma, tree);
    if (use_json)
        std::cout << code_to_json(word).dump() << "\n";
    else
        std::cout << format_code(word) << "\n";
    return 0;
}

int run_decode(const std::string& sigma_text, const std::string& code_text, int n,
               bool use_json) {
    LabelledTree tree = decode(parse_partition(sigma_text, n), parse_code(code_text, n));
    if (use_json)
        std::cout << tree_to_json(tree).dump() << "\n";
    else
        std::cout << format_tree(tree);
    return 0;
}

int run_enumerate(int n, const std::string& lambda_text, const std::string& pi_text,
                  bool use_json, int bound) {
    if (n < 1) throw PreconditionError("vertex count must be at least 1");
    if (n > bound)
        throw BoundError("enumeration over n = " + std::to_string(n) +
                         " exceeds the bound " + std::to_string(bound) +
                         " (use --extended for n = 9)");
    std::optional<IntegerPartition> lambda;
    if (!lambda_text.empty()) {
        lambda = parse_type(lambda_text);
        if (lambda->sum() != n - 1)
            throw PreconditionError("type must sum to n-1 = " + std::to_string(n - 1));
    }
    std::optional<SetPartition> pi;
    if (!pi_text.empty()) pi = parse_partition(pi_text, n);

    json trees = json::array();
    bool first = true;
    for_each_tree(n, [&](const LabelledTree& tree) {
        if (lambda && !(indegree_partition(tree) == *lambda)) return;
        if (pi && !(tree_partition(tree) == *pi)) return;
        if (use_json) {
            trees.push_back(tree_to_json(tree));
        } else {
            if (!first) std::cout << "\n";
            std::cout << format_tree(tree);
            first = false;
        }
    });
    if (use_json) std::cout << trees.dump() << "\n";
    return 0;
}

int run_omega(const std::string& pi_text, int n, std::string format, bool use_json,
              int bound) {
    SetPartition pi = parse_partition(pi_text, n);
    auto words = fiber_code_set(pi, bound);
    if (format.empty()) format = (pi.block_count() == 3 && !use_json) ? "grid" : "json";
    if (format == "grid") {
        std::cout << render_code_grid(pi, words);
    } else {
        json out = json::array();
        for (const CodeWord& w : words) out.push_back(code_to_json(w));
        std::cout << out.dump() << "\n";
    }
    return 0;
}

int run_swap(const std::string& tree_path, int pivot, bool use_json) {
    LabelledTree swapped = swap_adjacent_labels(parse_tree(read_input(tree_path)), pivot);
    if (use_json)
        std::cout << tree_to_json(swapped).dump() << "\n";
    else
        std::cout << format_tree(swapped);
    return 0;
}

int run_verify(int n, const std::string& suite, bool use_json) {
    const std::vector<std::string> all{"lattice", "census", "codec", "involution", "omega"};
    std::vector<std::string> chosen;
    if (suite == "all")
        chosen = all;
    else
        chosen.push_back(suite);

    bool ok = true;
    json report = json::array();
    for (const std::string& name : chosen) {
        CheckRun run;
        run.use_json = use_json;
        if (!use_json) std::cout << name << " suite, n = " << n << ":\n";
        if (name == "lattice")
            verify_lattice(n, run);
        else if (name == "census")
            verify_census(n, run);
        else if (name == "codec")
            verify_codec(n, run);
        else if (name == "involution")
            verify_involution(n, run);
        else if (name == "omega")
            verify_omega(n, run);
        ok &= run.all_pass;
        if (use_json)
            report.push_back(
                {{"suite", name}, {"n", n}, {"checks", run.checks}, {"pass", run.all_pass}});
    }
    if (use_json)
        std::cout << json{{"suites", report}, {"pass", ok}}.dump() << "\n";
    else
        std::cout << (ok ? "all checks passed" : "CHECKS FAILED") << "\n";
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"labelled trees by indegree partition: counts, codes, verification"};
    app.require_subcommand(1);

    bool use_json = false;
    app.add_flag("--json", use_json, "JSON output");

    std::string lambda_text, pi_text, sigma_text, code_text, tree_path, format, suite = "all";
    int n = 0, pivot = 0;
    bool extended = false;

    auto* count = app.add_subcommand("count", "count trees by type or by partition");
    auto* count_lambda = count->add_option("--lambda", lambda_text, "comma-separated type");
    auto* count_pi = count->add_option("--pi", pi_text, "partition string");
    auto* count_n = count->add_option("--n", n, "vertex count (with --pi)");
    count_pi->needs(count_n);
    count_lambda->excludes(count_pi);

    auto* phi = app.add_subcommand("phi", "partition of a tree");
    phi->add_option("--tree", tree_path, "tree file, or - for stdin")->required();

    auto* enc = app.add_subcommand("encode", "code word of a tree");
    enc->add_option("--sigma", sigma_text, "partition string")->required();
    enc->add_option("--tree", tree_path, "tree file, or - for stdin")->required();

    auto* dec = app.add_subcommand("decode", "tree of a code word");
    dec->add_option("--sigma", sigma_text, "partition string")->required();
    dec->add_option("--code", code_text, "comma-separated code word")->required();
    dec->add_option("--n", n, "vertex count")->required();

    auto* enumerate = app.add_subcommand("enumerate", "list trees");
    enumerate->add_option("--n", n, "vertex count")->required();
    auto* enum_lambda = enumerate->add_option("--lambda", lambda_text, "filter by type");
    auto* enum_pi = enumerate->add_option("--pi", pi_text, "filter by partition");
    enum_lambda->excludes(enum_pi);
    enumerate->add_flag("--extended", extended, "allow n = 9");

    auto* omega = app.add_subcommand("omega", "code set of a partition fiber");
    omega->add_option("--pi", pi_text, "partition string")->required();
    omega->add_option("--n", n, "vertex count")->required();
    omega->add_option("--format", format, "grid|json")
        ->check(CLI::IsMember({"grid", "json"}));
    omega->add_flag("--extended", extended, "allow n = 9");

    auto* swap = app.add_subcommand("swap", "exchange adjacent labels i, i+1");
    swap->add_option("--tree", tree_path, "tree file, or - for stdin")->required();
    swap->add_option("--i", pivot, "pivot label i")->required();

    auto* verify = app.add_subcommand("verify", "run verification suites");
    verify->add_option("--n", n, "exhaustive bound")->default_val(6);
    verify->add_option("--suite", suite, "all|census|codec|involution|lattice|omega")
        ->check(CLI::IsMember({"all", "census", "codec", "involution", "lattice", "omega"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        const int bound = extended ? 9 : kDefaultEnumerationBound;
        if (count->parsed()) {
            if (lambda_text.empty() == pi_text.empty()) {
                std::cerr << "count needs exactly one of --lambda or --pi\n";
                return 2;
            }
            return run_count(lambda_text, pi_text, n, use_json);
        }
        if (phi->parsed()) return run_phi(tree_path, use_json);
        if (enc->parsed()) return run_encode(sigma_text, tree_path, use_json);
        if (dec->parsed()) return run_decode(sigma_text, code_text, n, use_json);
        if (enumerate->parsed())
            return run_enumerate(n, lambda_text, pi_text, use_json, bound);
        if (omega->parsed()) return run_omega(pi_text, n, format, use_json, bound);
        if (swap->parsed()) return run_swap(tree_path, pivot, use_json);
        if (verify->parsed()) return run_verify(n, suite, use_json);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::overflow_error& e) {
        std::cerr << "error: arithmetic overflow: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
