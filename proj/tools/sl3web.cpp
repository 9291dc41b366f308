// Command-line front end.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>

#include "CLI11.hpp"
#include "sl3/errors.hpp"
#include "sl3/hulls.hpp"
#include "sl3/io.hpp"
#include "sl3/synthesis.hpp"

using namespace sl3;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Calls f.template operator()<K>() with K chosen by the document's field.
template <class F>
auto with_field(const std::string& field, long p, F&& f) {
    if (field == "Fp") {
        ModulusScope scope(static_cast<std::uint32_t>(p));
        return f.template operator()<Fp>();
    }
    return f.template operator()<Rational>();
}

Json lattice_list(const Json& doc) {
    if (doc.is_array()) return doc;
    if (doc.is_object() && doc.contains("lattices")) return doc.at("lattices");
    throw ParseError("expected a list of lattices or {\"lattices\": [...]}");
}

std::string field_of_list(const Json& doc, long* p) {
    if (doc.is_object()) return field_of(doc, p);
    if (doc.is_array() && !doc.empty()) return field_of(doc.front(), p);
    return "Q";
}

template <class K>
std::vector<LatticeClass<K>> classes_from(const Json& list) {
    std::vector<LatticeClass<K>> out;
    for (const auto& l : list) out.push_back(LatticeClass<K>::of(lattice_from_json<K>(l)));
    return out;
}

GrowthDiagram component(const TypeWord& w, int index) {
    auto ds = enumerate_diagrams(w);
    if (index < 1 || index > static_cast<int>(ds.size()))
        throw UsageError("component must be between 1 and " + std::to_string(ds.size()) + " for word " +
                         word_str(w));
    return ds[static_cast<size_t>(index - 1)];
}

std::string emit(const Web& w, const std::string& format) {
    if (format == "dot") return web_dot(w);
    if (format == "tikz") return web_tikz(w);
    return web_to_json(w).dump() + "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"sl3 webs, growth diagrams and the affine building"};
    app.require_subcommand(1);
    std::string word, file, format = "json", out_dir, field = "Fp";
    bool count = false, geometric = false, hmin = false, hmax = false, hconv = false;
    int i_idx = 0, j_idx = 0, comp = 0, retries = 1000;
    long p = 10007;
    std::uint64_t seed = 1;

    auto* dim = app.add_subcommand("dim", "dimension of the invariant space");
    dim->add_option("WORD", word, "type word over {1,2}")->required();

    auto* diagrams = app.add_subcommand("diagrams", "list growth diagrams of a word");
    diagrams->add_option("WORD", word)->required();
    diagrams->add_flag("--count", count, "print only the number");

    auto* webs = app.add_subcommand("webs", "basis webs of a word");
    webs->add_option("WORD", word)->required();
    webs->add_option("--format", format)->check(CLI::IsMember({"json", "dot", "tikz"}));
    webs->add_option("--out", out_dir, "write one file per web into this directory");

    auto* dualize_cmd = app.add_subcommand("dualize", "web dual to a diskoid");
    dualize_cmd->add_option("FILE", file)->required();

    auto* reduce_cmd = app.add_subcommand("reduce", "apply the spider relations");
    reduce_cmd->add_option("FILE", file)->required();

    auto* promote = app.add_subcommand("promote", "promote a growth diagram");
    promote->add_option("FILE", file)->required();

    auto* dist = app.add_subcommand("distance", "distance between two lattices of a list (1-based)");
    dist->add_option("FILE", file)->required();
    dist->add_option("I", i_idx)->required();
    dist->add_option("J", j_idx)->required();

    auto* hull = app.add_subcommand("hull", "hull of a list of lattices");
    hull->add_option("FILE", file)->required();
    auto* fmin = hull->add_flag("--min", hmin);
    auto* fmax = hull->add_flag("--max", hmax);
    auto* fconv = hull->add_flag("--conv", hconv);
    fmin->excludes(fmax)->excludes(fconv);
    fmax->excludes(fconv);

    auto* realize = app.add_subcommand("realize", "lattices realizing one component (1-based)");
    realize->add_option("WORD", word)->required();
    realize->add_option("--component", comp)->required();
    realize->add_option("--seed", seed);
    realize->add_option("--field", field)->check(CLI::IsMember({"Q", "Fp"}));
    realize->add_option("--p", p);
    realize->add_option("--max-retries", retries);

    auto* verify = app.add_subcommand("verify", "check every component of a word");
    verify->add_option("WORD", word)->required();
    verify->add_flag("--geometric", geometric, "also realize over F_p and compare hulls");
    verify->add_option("--max-retries", retries);
    verify->add_option("--seed", seed);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (dim->parsed()) {
            std::cout << dim_inv(parse_word(word)) << "\n";
        } else if (diagrams->parsed()) {
            auto ds = enumerate_diagrams(parse_word(word));
            if (count)
                std::cout << ds.size() << "\n";
            else
                for (const auto& d : ds) std::cout << diagram_to_json(d).dump() << "\n";
        } else if (webs->parsed()) {
            const TypeWord w = parse_word(word);
            auto ds = enumerate_diagrams(w);
            if (!out_dir.empty()) std::filesystem::create_directories(out_dir);
            for (size_t k = 0; k < ds.size(); ++k) {
                Web web = dualize(diskoid_from_diagram(ds[k]));
                std::string text = emit(web, format);
                if (out_dir.empty()) {
                    std::cout << text;
                } else {
                    auto path = std::filesystem::path(out_dir) /
                                (word + "_" + std::to_string(k + 1) + "." + (format == "json" ? "json" : format == "dot" ? "dot" : "tex"));
                    std::ofstream(path) << text;
                    std::cout << path.string() << "\n";
                }
            }
        } else if (dualize_cmd->parsed()) {
            std::cout << web_to_json(dualize(diskoid_from_json(read_json_file(file)))).dump() << "\n";
        } else if (reduce_cmd->parsed()) {
            std::cout << combination_to_json(reduce(web_from_json(read_json_file(file)))).dump() << "\n";
        } else if (promote->parsed()) {
            GrowthDiagram d = diagram_from_json(read_json_file(file));
            std::cout << diagram_to_json(d.n() ? d.rotated(1) : d).dump() << "\n";
        } else if (dist->parsed()) {
            Json doc = read_json_file(file);
            long fp = 10007;
            std::string f = field_of_list(doc, &fp);
            with_field(f, fp, [&]<class K>() {
                auto cls = classes_from<K>(lattice_list(doc));
                int n = static_cast<int>(cls.size());
                if (i_idx < 1 || i_idx > n || j_idx < 1 || j_idx > n)
                    throw UsageError("indices must be between 1 and " + std::to_string(n));
                DominantWeight d = distance(cls[i_idx - 1], cls[j_idx - 1]);
                std::cout << d.str() << "\n";
                return 0;
            });
        } else if (hull->parsed()) {
            if (!hmin && !hmax && !hconv) throw UsageError("hull needs one of --min, --max, --conv");
            Json doc = read_json_file(file);
            long fp = 10007;
            std::string f = field_of_list(doc, &fp);
            with_field(f, fp, [&]<class K>() {
                auto cls = classes_from<K>(lattice_list(doc));
                VertexSet<K> s(cls.begin(), cls.end());
                VertexSet<K> h = hmin ? minconv(s) : hmax ? maxconv(s) : conv(s);
                Json out = Json::array();
                for (const auto& c : h) out.push_back(lattice_to_json(c.rep()));
                std::cout << out.dump() << "\n";
                return 0;
            });
        } else if (realize->parsed()) {
            const TypeWord w = parse_word(word);
            GrowthDiagram d = component(w, comp);
            if (retries < 1) throw UsageError("--max-retries must be positive");
            with_field(field, p, [&]<class K>() {
                std::mt19937_64 rng(substream_seed(seed, static_cast<std::uint64_t>(comp)));
                RealizedPolygon<K> r = realize_polygon<K>(d, rng, retries);
                Json cls = Json::array();
                for (const auto& c : r.classes) cls.push_back(lattice_to_json(c.rep()));
                Json out{{"word", word_str(w)}, {"component", comp}, {"attempts", r.attempts}, {"classes", cls}};
                std::cout << out.dump() << "\n";
                return 0;
            });
        } else if (verify->parsed()) {
            const TypeWord w = parse_word(word);
            auto ds = enumerate_diagrams(w);
            std::set<std::string> keys;
            bool all = true;
            for (size_t k = 0; k < ds.size(); ++k) {
                std::string why;
                Diskoid dk = diskoid_from_diagram(ds[k]);
                Web web = dualize(dk);
                if (!is_cat0(dk)) why += " not-cat0";
                if (dk.boundary_type() != w || web.boundary_type() != w) why += " boundary-type";
                if (!is_nonelliptic(web)) why += " elliptic";
                if (!keys.insert(web.key()).second) why += " duplicate-web";
                if (geometric) {
                    ModulusScope scope(10007);
                    std::mt19937_64 rng(substream_seed(seed, k + 1));
                    try {
                        auto r = realize_polygon<Fp>(ds[k], rng, retries);
                        if (!cross_validate(r)) why += " hull-mismatch";
                    } catch (const RealizationFailed& e) {
                        why += " realization-failed";
                    }
                }
                all = all && why.empty();
                std::cout << "component " << k + 1 << ": " << (why.empty() ? "PASS" : "FAIL" + why) << "\n";
            }
            std::cout << ds.size() << " components, dim " << dim_inv(w) << "\n";
            if (ds.size() != dim_inv(w)) all = false;
            return all ? 0 : 1;
        }
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
