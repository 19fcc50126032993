// affinv: enumerate invariant ideals of the cone order and check the codes
// they define.

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "affinv/affinv.hpp"
#include "affinv/io.hpp"

using namespace affinv;
using nlohmann::json;

namespace {

enum Exit { Ok = 0, Invalid = 2, Cap = 3, NotInv = 4, VerifyFail = 5 };

struct Config {
    coord p = 0;
    int m = 0, r = 3;
    bool count_only = false;
    std::string emit, format = "jsonl", direction = "backward", ideal_file, render = "ascii";
    std::int64_t cap_field = default_field_cap, cap_scan = default_scan_cap;
    coord shards = 1, shard = 0;
    int basis_offset = 0;
    bool inject_mutant = false;
};

struct Output {
    std::ofstream file;
    std::ostream* os = &std::cout;
    explicit Output(const std::string& path) {
        if (path.empty() || path == "-") return;
        file.open(path);
        if (!file) throw InvalidParams("cannot open " + path);
        os = &file;
    }
};

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidParams("cannot read " + path);
    try {
        std::string line, text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
        std::istringstream ss(text);
        // a JSONL stream is accepted; its first record is used
        while (std::getline(ss, line))
            if (line.find_first_not_of(" \t\r") != std::string::npos) break;
        try {
            return json::parse(text);
        } catch (const json::parse_error&) {
            return json::parse(line);
        }
    } catch (const json::exception& e) {
        throw InvalidParams(std::string("malformed JSON: ") + e.what());
    }
}

Params params_from(const Config& c, const std::optional<io::IdealInput>& in = std::nullopt) {
    coord p = c.p;
    int m = c.m, r = c.r;
    if (in) {
        if (!p && in->p) p = *in->p;
        if (!m && in->m) m = *in->m;
        if (in->r && c.r == 3) r = *in->r;
    }
    if (!p || !m) throw InvalidParams("--p and --m are required");
    return Params(p, m, r);
}

int cmd_enumerate(const Config& c) {
    Params P = params_from(c);
    if (c.shards < 1 || c.shard < 0 || c.shard >= c.shards) throw InvalidParams("need 0 <= --shard < --shards");
    Shard sh{c.shards, c.shard};
    if (c.count_only) {
        BigInt total = P.r == 3
            ? count_all_r3(P, c.direction == "forward" ? Direction::Forward : Direction::Backward, sh)
            : count_all_r1(P, sh);
        std::cout << total << "\n";
        return Ok;
    }
    Output out(c.emit);
    const bool pts = c.format == "points";
    if (P.r == 3) {
        enumerate_all_r3(P, c.direction == "forward" ? Direction::Forward : Direction::Backward, sh,
                         [&](const std::vector<Profile>& L) {
                             *out.os << io::record_r3(P, L, pts).dump() << "\n";
                             return true;
                         });
    } else {
        enumerate_all_r1(P, sh, [&](const std::vector<Profile>& L) {
            *out.os << io::record_r1(P, L, pts).dump() << "\n";
            return true;
        });
    }
    return Ok;
}

int cmd_defining_set(const Config& c) {
    if (c.ideal_file.empty()) throw InvalidParams("--ideal is required");
    json j = read_json_file(c.ideal_file);
    auto in = io::ideal_from_json(j, c.p ? std::optional<coord>(c.p) : std::nullopt);
    Params P = params_from(c, in);
    if (auto why = invariance_violation(in.points, P); !why.empty()) {
        std::cerr << "not an A^" << P.r << "-invariant ideal: " << why << "\n";
        return NotInv;
    }
    Output out(c.emit);
    *out.os << "count " << sigma_preimage_count(in.points, P) << "\n";
    try {
        for (auto s : sigma_preimage_list(in.points, P, c.cap_scan)) *out.os << s << "\n";
    } catch (const CapExceeded& e) {
        std::cerr << "list omitted: " << e.what() << "\n";
    }
    return Ok;
}

struct Entry {
    std::string name;
    Ideal3 ideal;
    bool mutant = false;
};

int cmd_verify(const Config& c) {
    std::vector<Entry> rows;
    std::optional<io::IdealInput> in;
    if (!c.ideal_file.empty()) {
        in = io::ideal_from_json(read_json_file(c.ideal_file), c.p ? std::optional<coord>(c.p) : std::nullopt);
    }
    Params P = params_from(c, in);
    if (in) {
        rows.push_back({"input", in->points});
    } else {
        int k = 0;
        auto add = [&](const std::set<Point3>& s) {
            rows.push_back({"ideal " + std::to_string(k++), s});
            return true;
        };
        if (P.r == 3) enumerate_all_r3(P, Direction::Backward, {}, [&](const auto& L) { return add(layer_points(L)); });
        else enumerate_all_r1(P, {}, [&](const auto& L) { return add(sym_points(L)); });
    }
    if (c.inject_mutant) {
        std::vector<Entry> mutants;
        for (const Entry& r : rows)
            if (r.ideal.size() >= 2) {
                Entry m{r.name + " minus origin", r.ideal, true};
                m.ideal.erase({0, 0, 0});
                mutants.push_back(m);
            }
        rows.insert(rows.end(), mutants.begin(), mutants.end());
    }

    std::cout << "name\tpoints\tdefining\tdim\tinvariant\tsum_zero\tverdict\n";
    int fails = 0, passes = 0;
    std::set<std::vector<affinv::Row>> seen;
    bool distinct = true;
    for (const Entry& r : rows) {
        bool ideal_ok = is_Ar_invariant(r.ideal, P);
        CodeSpec spec = ideal_ok ? build_code(r.ideal, P, c.cap_field)
                                 : build_code_from_exponents(sigma_preimage_list(r.ideal, P, c.cap_field), P, c.cap_field);
        auto gens = agl_generators(spec, c.basis_offset);
        bool inv = verify_invariance(spec, gens);
        bool sz = inside_sum_zero(spec);
        bool dichotomy = sz == !r.ideal.empty();
        bool ok = ideal_ok && inv && dichotomy;
        if (!r.mutant && !seen.insert(code_fingerprint(spec)).second) distinct = false;
        ok ? ++passes : ++fails;
        std::cout << r.name << "\t" << r.ideal.size() << "\t" << spec.exponents.size() << "\t" << code_dimension(spec)
                  << "\t" << (inv ? "yes" : "no") << "\t" << (sz ? "yes" : "no") << "\t" << (ok ? "PASS" : "FAIL")
                  << "\n";
    }
    if (!distinct) ++fails;
    std::cout << "codes pairwise distinct: " << (distinct ? "yes" : "no") << "\n";
    std::cout << passes << "/" << rows.size() << " PASS\n";
    return fails ? VerifyFail : Ok;
}

int cmd_render(const Config& c) {
    if (c.ideal_file.empty()) throw InvalidParams("--ideal is required");
    auto in = io::ideal_from_json(read_json_file(c.ideal_file), c.p ? std::optional<coord>(c.p) : std::nullopt);
    coord n = 0;
    if ((c.p || in.p) && (c.m || in.m)) n = params_from(c, in).n;
    for (Point3 u : in.points) n = std::max({n, u.x, u.y, u.z});
    Output out(c.emit);
    if (c.render == "svg") *out.os << render_svg(in.points, n);
    else *out.os << render_ascii(in.points, n);
    return Ok;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Invariant ideals of the cone order and their codes"};
    app.require_subcommand(1);
    Config c;

    auto instance = [&](CLI::App* s, bool required) {
        auto* op = s->add_option("--p", c.p, "prime p");
        auto* om = s->add_option("--m", c.m, "extension degree m, a multiple of 3");
        if (required) {
            op->required();
            om->required();
        }
        s->add_option("--r", c.r, "1 or 3")->check(CLI::IsMember({1, 3}));
    };

    auto* en = app.add_subcommand("enumerate", "list every invariant ideal as JSON lines");
    instance(en, true);
    en->add_flag("--count-only", c.count_only, "print only the number of ideals");
    en->add_option("--emit", c.emit, "output path (default stdout)");
    en->add_option("--format", c.format, "jsonl or points")->check(CLI::IsMember({"jsonl", "points"}));
    en->add_option("--direction", c.direction, "backward or forward")->check(CLI::IsMember({"backward", "forward"}));
    en->add_option("--shards", c.shards, "number of shards");
    en->add_option("--shard", c.shard, "shard index");

    auto* co = app.add_subcommand("count", "print the number of invariant ideals");
    instance(co, true);
    co->add_option("--direction", c.direction, "backward or forward")->check(CLI::IsMember({"backward", "forward"}));
    co->add_option("--shards", c.shards, "number of shards");
    co->add_option("--shard", c.shard, "shard index");

    auto* ds = app.add_subcommand("defining-set", "count and list the exponents of an ideal");
    ds->alias("export");
    instance(ds, false);
    ds->add_option("--ideal", c.ideal_file, "JSON file with the ideal")->required();
    ds->add_option("--emit", c.emit, "output path (default stdout)");
    ds->add_option("--cap-scan", c.cap_scan, "largest p^m scanned for the list");

    auto* ve = app.add_subcommand("verify", "build the codes and check invariance");
    instance(ve, false);
    ve->add_option("--ideal", c.ideal_file, "check a single ideal instead of all");
    ve->add_option("--cap-field", c.cap_field, "largest p^m for field work");
    ve->add_option("--basis-offset", c.basis_offset, "first power of the generator in the basis");
    ve->add_flag("--inject-mutant", c.inject_mutant, "also check copies with the origin removed");

    auto* re = app.add_subcommand("render", "draw an ideal");
    instance(re, false);
    re->add_option("--ideal", c.ideal_file, "JSON file with the ideal")->required();
    re->add_option("--render", c.render, "ascii or svg")->check(CLI::IsMember({"ascii", "svg"}));
    re->add_option("--emit", c.emit, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return Invalid;
    }

    try {
        if (en->parsed()) return cmd_enumerate(c);
        if (co->parsed()) {
            c.count_only = true;
            return cmd_enumerate(c);
        }
        if (ds->parsed()) return cmd_defining_set(c);
        if (ve->parsed()) return cmd_verify(c);
        if (re->parsed()) return cmd_render(c);
    } catch (const CapExceeded& e) {
        std::cerr << "cap exceeded: " << e.what() << "\n";
        return Cap;
    } catch (const NotInvariant& e) {
        std::cerr << "not invariant: " << e.what() << "\n";
        return NotInv;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return Invalid;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return Invalid;
    }
    return Invalid;
}
