#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"
#include "treeuniv/harness.hpp"
#include "treeuniv/io.hpp"

namespace treeuniv {

namespace {

nlohmann::json embedding_json(const Embedding& e, const OrientedTree& t, const Digraph& host) {
    nlohmann::json j;
    for (size_t v = 0; v < e.map.size(); ++v) j[std::to_string(v)] = e.map[v];
    j["valid"] = e.valid(t, host);
    return j;
}

nlohmann::json partition_json(const Partition3& p, const Digraph& host) {
    nlohmann::json j;
    j["tag"] = p.tag == PartitionTag::directed ? "directed"
               : p.tag == PartitionTag::directed_reversed ? "directed-reversed"
                                                          : "oriented";
    j["ell"] = p.ell;
    j["x"] = p.x_set;
    j["y"] = p.y_set;
    j["z"] = p.z_set;
    nlohmann::json xw = nlohmann::json::object();
    for (const auto& [x, w] : p.x_witness)
        xw[std::to_string(x)] = {{"y_minus", w.y_minus}, {"y_plus", w.y_plus}};
    j["x_witness"] = std::move(xw);
    nlohmann::json yw = nlohmann::json::object();
    for (const auto& [y, path] : p.y_witness) yw[std::to_string(y)] = path;
    j["y_witness"] = std::move(yw);
    auto bad = p.validate(host);
    j["violations"] = bad;
    return j;
}

void persist(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

std::vector<InstanceFamily> default_universality_families(int k, int n_max, int samples,
                                                          uint64_t seed) {
    // Tournaments reach any chromatic number cheaply; mix in dense digraphs.
    std::vector<InstanceFamily> fams;
    for (int i = 0; i < samples; ++i) {
        int n = std::min(n_max, 2 * k - 2 + (i % std::max(1, n_max - (2 * k - 2) + 1)));
        switch (i % 3) {
            case 0: fams.push_back({FamilyKind::random_tournament, n, 0.0, seed + i, {}}); break;
            case 1: fams.push_back({FamilyKind::random_gnp_digraph, n, 0.8, seed + i, {}}); break;
            default: fams.push_back({FamilyKind::random_gnp_digraph, n, 0.6, seed + i, {}}); break;
        }
    }
    return fams;
}

int cmd_chi(const std::string& file, int cap) {
    Digraph d = read_digraph_file(file);
    ColouringOptions opt;
    opt.max_vertices = cap;
    Colouring col = optimal_colouring(d, opt);
    std::cout << "chi " << col.num_colours << "\n";
    for (size_t v = 0; v < col.colour.size(); ++v)
        std::cout << "colour " << v << " " << col.colour[v] << "\n";
    return 0;
}

}  // namespace

int run_cli(int argc, char** argv) {
    CLI::App app{"Constructive universality toolkit for oriented trees in digraphs"};
    app.require_subcommand(1);

    std::string json_path;

    // chi -------------------------------------------------------------
    auto* chi_cmd = app.add_subcommand("chi", "exact chromatic number of a digraph file");
    std::string chi_file;
    int chi_cap = 64;
    chi_cmd->add_option("file", chi_file, "digraph file")->required();
    chi_cmd->add_option("--cap", chi_cap, "exact-solver vertex cap");

    // gen -------------------------------------------------------------
    auto* gen_cmd = app.add_subcommand("gen", "generate an instance digraph");
    InstanceFamily gen_family;
    std::string gen_kind = "random_gnp_digraph", gen_out;
    gen_cmd->add_option("--family", gen_kind, "instance family")->required();
    gen_cmd->add_option("--n", gen_family.n, "order")->required();
    gen_cmd->add_option("--p", gen_family.p, "arc probability");
    gen_cmd->add_option("--seed", gen_family.seed, "generator seed");
    gen_cmd->add_option("--offsets", gen_family.offsets, "circulant offsets");
    gen_cmd->add_option("-o,--out", gen_out, "output file (stdout otherwise)");

    // embed -----------------------------------------------------------
    auto* embed_cmd = app.add_subcommand("embed", "embed an oriented tree into a host digraph");
    std::string embed_host, embed_tree, embed_method = "constructive";
    int embed_slack = 1;
    embed_cmd->add_option("--host", embed_host, "host digraph file")->required();
    embed_cmd->add_option("--tree", embed_tree, "tree file")->required();
    embed_cmd->add_option("--method", embed_method, "constructive | bruteforce | hybrid");
    embed_cmd->add_option("--slack", embed_slack, "extra margin for directed gluing");
    embed_cmd->add_option("--json", json_path, "persist the result as JSON");

    // partition ---------------------------------------------------------
    auto* part_cmd = app.add_subcommand("partition", "run a partition lemma on a host");
    std::string part_host, part_variant = "forward", part_path;
    int part_ell = -1;
    part_cmd->add_option("--host", part_host, "host digraph file")->required();
    part_cmd->add_option("--ell", part_ell, "directed partition parameter");
    part_cmd->add_option("--variant", part_variant, "forward | reversed");
    part_cmd->add_option("--path", part_path, "rooted path file (oriented partition)");
    part_cmd->add_option("--json", json_path, "persist the result as JSON");

    // decompose ---------------------------------------------------------
    auto* dec_cmd = app.add_subcommand("decompose", "descending path decomposition of a tree");
    std::string dec_tree;
    int dec_root = -1, dec_chunk = 0;
    dec_cmd->add_option("--tree", dec_tree, "tree file")->required();
    dec_cmd->add_option("--root", dec_root, "root vertex (default: tree's root line)");
    dec_cmd->add_option("--chunk", dec_chunk, "split paths into chunks of this length");

    // bounds ------------------------------------------------------------
    auto* bounds_cmd = app.add_subcommand("bounds", "evaluate a universality bound");
    std::string bound_name;
    BoundSpec bound_spec;
    bounds_cmd->add_option("--name", bound_name, "bound family")->required();
    bounds_cmd->add_option("--k", bound_spec.k, "tree order");
    bounds_cmd->add_option("--b", bound_spec.b, "block count");
    bounds_cmd->add_option("--ell", bound_spec.ell, "path length");
    bounds_cmd->add_option("--c", bound_spec.c, "base universality bound");
    bounds_cmd->add_option("--cprime", bound_spec.c_prime, "subtree universality bound");
    bounds_cmd->add_option("--kprime", bound_spec.k_prime, "subtree order");
    bounds_cmd->add_option("--json", json_path, "persist the result as JSON");

    // verify ------------------------------------------------------------
    auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
    std::string suite, verify_bound = "burr", verify_method = "bruteforce";
    int v_nmax = 24, v_samples = 200, v_k = 3, v_slack = 1;
    uint64_t v_seed = 1;
    verify_cmd->add_option("--suite", suite, "partitions | universality | inequalities")->required();
    verify_cmd->add_option("--n-max", v_nmax, "largest host order");
    verify_cmd->add_option("--samples", v_samples, "sample count");
    verify_cmd->add_option("--seed", v_seed, "suite seed");
    verify_cmd->add_option("--k", v_k, "tree order (universality suite)");
    verify_cmd->add_option("--bound", verify_bound, "bound family (universality suite)");
    verify_cmd->add_option("--method", verify_method, "constructive | bruteforce | hybrid");
    verify_cmd->add_option("--slack", v_slack, "extra margin for directed gluing");
    verify_cmd->add_option("--json", json_path, "persist the result as JSON");

    // tightness -----------------------------------------------------------
    auto* tight_cmd = app.add_subcommand("tightness", "out-star absence in the regular tournament");
    int tight_k = 3;
    tight_cmd->add_option("--k", tight_k, "star order")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*chi_cmd) return cmd_chi(chi_file, chi_cap);

        if (*gen_cmd) {
            gen_family.kind = family_kind_from_string(gen_kind);
            Digraph d = generate(gen_family);
            std::string text = format_digraph(d);
            if (gen_out.empty())
                std::cout << text;
            else
                persist(gen_out, text);
            return 0;
        }

        if (*embed_cmd) {
            Digraph host = read_digraph_file(embed_host);
            OrientedTree tree = read_tree_file(embed_tree);
            EmbedMethod method = method_from_string(embed_method);
            std::optional<Embedding> found;
            std::string error;
            try {
                if (method == EmbedMethod::bruteforce) {
                    BruteForceOptions bf;
                    bf.max_host = 64;
                    found = brute_force_embed(host, tree, std::nullopt, bf);
                } else {
                    PipelineOptions po;
                    po.glue.slack = embed_slack;
                    po.glue.brute.max_host = 64;
                    found = embed_oriented_tree(host, tree, po);
                    if (method == EmbedMethod::hybrid) {
                        BruteForceOptions bf;
                        bf.max_host = 64;
                        auto check = brute_force_embed(host, tree, std::nullopt, bf);
                        if (found && !check) throw std::logic_error("oracle dominance violated");
                    }
                }
            } catch (const EmbedFailure& e) {
                error = e.what();
            } catch (const PreconditionError& e) {
                error = e.what();
            }
            if (found) {
                std::string out = embedding_json(*found, tree, host).dump(2) + "\n";
                std::cout << out;
                if (!json_path.empty()) persist(json_path, out);
                return 0;
            }
            std::cerr << "no embedding: " << (error.empty() ? "search exhausted" : error) << "\n";
            return 1;
        }

        if (*part_cmd) {
            Digraph host = read_digraph_file(part_host);
            Partition3 part;
            if (!part_path.empty()) {
                part = oriented_partition(host, read_rooted_path_file(part_path));
            } else if (part_ell >= 0) {
                PartitionVariant variant = part_variant == "reversed" ? PartitionVariant::reversed
                                                                      : PartitionVariant::forward;
                part = directed_partition(host, part_ell, variant);
            } else {
                std::cerr << "partition: give --ell or --path\n";
                return 2;
            }
            std::string out = partition_json(part, host).dump(2) + "\n";
            std::cout << out;
            if (!json_path.empty()) persist(json_path, out);
            return part.validate(host).empty() ? 0 : 1;
        }

        if (*dec_cmd) {
            OrientedTree tree = read_tree_file(dec_tree);
            int root = dec_root >= 0 ? dec_root : tree.root().value_or(0);
            PathDecomposition dec = descending_decomposition(tree, root);
            if (dec_chunk > 0) dec = chunk_paths(dec, dec_chunk);
            for (size_t i = 0; i < dec.paths.size(); ++i) {
                const auto& p = dec.paths[i];
                std::cout << "path " << i;
                for (int j = 0; j < p.order(); ++j) {
                    if (j) std::cout << (p.forward(j - 1) ? " > " : " < ");
                    else std::cout << " ";
                    std::cout << p.vertices()[j];
                }
                std::cout << "\n";
            }
            return dec.validate(tree).empty() ? 0 : 1;
        }

        if (*bounds_cmd) {
            bound_spec.name = bound_name_from_string(bound_name);
            double value = evaluate_bound(bound_spec);
            Interval iv = evaluate_bound_interval(bound_spec);
            if (!json_path.empty()) {
                nlohmann::json j = {{"name", bound_name},
                                    {"value", value},
                                    {"lo", iv.lo},
                                    {"hi", iv.hi},
                                    {"ceiling", bound_ceiling(bound_spec)}};
                persist(json_path, j.dump(2) + "\n");
            }
            if (value == static_cast<double>(static_cast<long long>(value)))
                std::cout << static_cast<long long>(value) << "\n";
            else
                std::cout << value << "\n";
            return 0;
        }

        if (*verify_cmd) {
            if (suite == "partitions") {
                PartitionSuiteParams p;
                p.n_max = v_nmax;
                p.samples = v_samples;
                p.seed = v_seed;
                ExperimentReport rep = verify_partitions(p);
                if (!json_path.empty()) persist(json_path, rep.to_json());
                std::cout << "partitions: " << rep.successes << "/" << rep.total
                          << " checks passed, " << rep.violations << " violations\n";
                return rep.all_passed() ? 0 : 1;
            }
            if (suite == "universality") {
                UniversalitySuiteParams p;
                p.k = v_k;
                p.bound = {.name = bound_name_from_string(verify_bound), .k = v_k};
                p.method = method_from_string(verify_method);
                p.glue.slack = v_slack;
                p.brute.max_host = 64;
                p.glue.brute.max_host = 64;
                p.families = default_universality_families(v_k, v_nmax, v_samples, v_seed);
                ExperimentReport rep = verify_universality(p);
                if (!json_path.empty()) persist(json_path, rep.to_json());
                std::cout << "universality: " << rep.successes << "/" << rep.total
                          << " embeddings, " << rep.failures << " failures, "
                          << rep.skipped_chi_cap << " hosts above the chi cap\n";
                return rep.all_passed() ? 0 : 1;
            }
            if (suite == "inequalities") {
                long long k_max = std::max(3, v_samples);
                SweepReport arbo = verify_inequality_arbo(k_max);
                MainSweepReport main_rep = verify_inequality_main(k_max);
                SweepReport rec = recurrence_sweep_vs_main(std::min<long long>(k_max, 10000));
                ChainBBlockReport chain = verify_chain_bblock(10, std::min<long long>(k_max, 1000));
                bool ok = arbo.all_passed() && main_rep.displayed.all_passed() &&
                          main_rep.variant_4k9.all_passed() && rec.all_passed() && chain.all_passed();
                std::cout << "arbo inequality: " << arbo.checked << " checked, min margin "
                          << arbo.min_margin << " at k=" << arbo.argmin_k << "\n";
                std::cout << "main inequality: " << main_rep.displayed.checked
                          << " checked, min margin " << main_rep.displayed.min_margin << " at k="
                          << main_rep.displayed.argmin_k << "\n";
                std::cout << "recurrence cap: " << rec.checked << " checked, min margin "
                          << rec.min_margin << " at k=" << rec.argmin_k << "\n";
                std::cout << "bblock chain: " << chain.checked << " checked, "
                          << chain.failures.size() << " failures\n";
                return ok ? 0 : 1;
            }
            std::cerr << "unknown suite '" << suite << "'\n";
            return 2;
        }

        if (*tight_cmd) {
            TightnessReport rep = tightness_check(tight_k);
            std::cout << "k=" << rep.k << " absent_in_regular_2k-3=" << (rep.absent_in_regular ? "yes" : "no")
                      << " present_in_order_2k-2=" << (rep.present_in_larger ? "yes" : "no") << "\n";
            return rep.passed() ? 0 : 1;
        }
    } catch (const ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

}  // namespace treeuniv
