#include "qgrass/report.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>

using namespace qgrass;

namespace {

struct RunConfig {
    int m = 2, n = 1, ell = 3, r = 1;
    std::optional<int> order;
    std::string s;
    bool all_s = false;
    int smax = 30;
    std::string lambda;
    std::string out;
    std::string format = "json";
};

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<int> parse_degrees(const RunConfig& cfg, const Shape& sh) {
    std::vector<int> out;
    if (cfg.all_s || cfg.s.empty()) {
        for (int s = 0; s <= sh.top_degree(); ++s) out.push_back(s);
        return out;
    }
    try {
        auto dots = cfg.s.find("..");
        if (dots == std::string::npos) {
            out.push_back(std::stoi(cfg.s));
        } else {
            int a = std::stoi(cfg.s.substr(0, dots)), b = std::stoi(cfg.s.substr(dots + 2));
            if (a > b) throw ConfigError("empty degree range " + cfg.s);
            for (int s = a; s <= b; ++s) out.push_back(s);
        }
    } catch (const std::logic_error&) {
        throw ConfigError("cannot parse --s " + cfg.s);
    }
    for (int s : out)
        if (s < 0 || s > sh.top_degree()) throw ConfigError("degree " + std::to_string(s) + " outside 0.." +
                                                            std::to_string(sh.top_degree()));
    return out;
}

IVec parse_weight(const std::string& text, int len) {
    IVec v;
    std::string cur;
    for (char c : text + ",") {
        if (c == ',' || c == '|' || c == ' ') {
            if (!cur.empty()) {
                try {
                    v.push_back(std::stoi(cur));
                } catch (const std::logic_error&) {
                    throw ConfigError("cannot parse --lambda " + text);
                }
                cur.clear();
            }
        } else {
            cur += c;
        }
    }
    if (static_cast<int>(v.size()) != len)
        throw ConfigError("--lambda needs " + std::to_string(len) + " coordinates");
    return v;
}

Shape shape_of(const RunConfig& cfg, bool need_m2) {
    Shape sh{cfg.m, cfg.n, cfg.ell, cfg.r};
    if (cfg.order && *cfg.order != cfg.ell) throw ConfigError("module commands use order = ell");
    try {
        validate(sh, need_m2);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
    return sh;
}

void emit(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw ConfigError("cannot open " + path);
    f << text;
}

int diagnose(const std::string& kind, const std::string& msg) {
    Json d{{"ok", false}, {"error", kind}, {"message", msg}};
    std::cout << d.dump(2) << "\n";
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verifier for quantum Grassmann superalgebras and their de Rham complexes"};
    app.require_subcommand(1, 1);
    RunConfig cfg;

    auto add_common = [&](CLI::App* sub, bool with_s) {
        sub->add_option("--m", cfg.m, "even rank");
        sub->add_option("--n", cfg.n, "odd rank");
        sub->add_option("--ell", cfg.ell, "char(q)");
        sub->add_option("--order", cfg.order, "order of q (module commands require order = ell)");
        sub->add_option("--r", cfg.r, "truncation");
        if (with_s) {
            sub->add_option("--s", cfg.s, "degree or range a..b");
            sub->add_flag("--all-s", cfg.all_s, "every degree");
        }
        sub->add_option("--out", cfg.out, "output file (default stdout)");
        sub->add_option("--format", cfg.format, "json, csv or dot")->check(CLI::IsMember({"json", "csv", "dot"}));
    };

    auto* identities = app.add_subcommand("identities", "q-binomial identity suite");
    add_common(identities, false);
    identities->add_option("--smax", cfg.smax, "largest s in the sweep");
    auto* dims = app.add_subcommand("dims", "graded dimensions against the closed formula");
    add_common(dims, true);
    auto* relations = app.add_subcommand("relations", "defining relations as matrix identities");
    add_common(relations, true);
    auto* socle = app.add_subcommand("socle", "socle certificate");
    add_common(socle, true);
    auto* loewy = app.add_subcommand("loewy", "energy-grade filtration and Loewy layers");
    add_common(loewy, true);
    auto* net = app.add_subcommand("net", "inclusion net of cyclic submodules");
    add_common(net, true);
    auto* derham = app.add_subcommand("derham", "truncated de Rham cohomology");
    add_common(derham, false);
    auto* poincare = app.add_subcommand("poincare", "exactness of one weight block of the untruncated complex");
    add_common(poincare, false);
    poincare->add_option("--lambda", cfg.lambda, "weight: m even coordinates then n bits, e.g. 1,0|0")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        return diagnose("config", e.what());
    }

    try {
        Report rep;
        auto* cmd = app.get_subcommands().front();
        std::string name = cmd->get_name();
        if (cfg.format == "dot" && name != "net") throw ConfigError("dot output is only available for net");
        if (name == "identities") {
            RootSpec spec{cfg.ell, cfg.order.value_or(cfg.ell)};
            try {
                validate(spec);
            } catch (const std::invalid_argument& e) {
                throw ConfigError(e.what());
            }
            if (cfg.smax < 0) throw ConfigError("--smax must be nonnegative");
            rep = report_identities(spec, cfg.smax);
        } else if (name == "derham") {
            rep = report_derham(shape_of(cfg, false));
        } else if (name == "poincare") {
            if (cfg.order && *cfg.order != cfg.ell) throw ConfigError("module commands use order = ell");
            IVec lam = parse_weight(cfg.lambda, cfg.m + cfg.n);
            try {
                validate(Shape{cfg.m, cfg.n, cfg.ell, 1});
                SuperWeight::of(Shape{cfg.m, cfg.n, cfg.ell, 1 << 20}, lam);
            } catch (const std::invalid_argument& e) {
                throw ConfigError(e.what());
            }
            bool zero = true;
            for (int v : lam) zero = zero && v == 0;
            if (zero) throw ConfigError("the weight must be nonzero");
            rep = report_poincare(cfg.m, cfg.n, cfg.ell, lam);
        } else {
            bool structural = name == "socle" || name == "loewy" || name == "net";
            Shape sh = shape_of(cfg, structural);
            auto degrees = parse_degrees(cfg, sh);
            if (name == "dims") rep = report_dims(sh, degrees);
            if (name == "relations") rep = report_relations(sh, degrees);
            if (name == "socle") rep = report_socle(sh, degrees);
            if (name == "loewy") rep = report_loewy(sh, degrees);
            if (name == "net") rep = report_net(sh, degrees);
        }
        if (cfg.format == "json")
            emit(rep.body.dump(2) + "\n", cfg.out);
        else if (cfg.format == "csv")
            emit(rep.csv, cfg.out);
        else
            emit(rep.dot, cfg.out);
        if (!rep.ok) {
            if (cfg.format != "json" || !cfg.out.empty())
                std::cout << Json{{"ok", false}, {"error", "assertion"}, {"command", name}}.dump(2) << "\n";
            return 1;
        }
        return 0;
    } catch (const ConfigError& e) {
        return diagnose("config", e.what());
    } catch (const std::exception& e) {
        return diagnose("internal", e.what());
    }
}
