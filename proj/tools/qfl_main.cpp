#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <memory>
#include <stdexcept>
#include <string>

#include "qfl/counts.hpp"
#include "qfl/families.hpp"
#include "qfl/forest_poly.hpp"
#include "qfl/json_io.hpp"
#include "qfl/noncrossing.hpp"
#include "qfl/schubert.hpp"
#include "qfl/suites.hpp"
#include "qfl/tamari.hpp"

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Format { Text, Json, Csv };

struct Options {
    int n = 3;
    std::uint64_t seed = 1;
    std::string order = "lex";
    Format format = Format::Text;
    int jobs = 1;
    std::string out;
};

// stdout unless --out was given
class Sink {
public:
    explicit Sink(const std::string& path) {
        if (!path.empty()) {
            file_ = std::make_unique<std::ofstream>(path);
            if (!*file_) throw UsageError("cannot open " + path);
        }
    }
    std::ostream& os() { return file_ ? *file_ : std::cout; }

private:
    std::unique_ptr<std::ofstream> file_;
};

void require_n(const std::string& what, int n, int max) {
    if (n < 1 || n > max)
        throw UsageError(what + " needs 1 <= n <= " + std::to_string(max) + " (got " + std::to_string(n) + ")");
}

template <class T, class Less>
void sort_for(std::vector<T>& v, const std::string& order, Less bruhat_like) {
    if (order == "lex") return;
    if (order != "length") throw UsageError("--order must be lex or length");
    std::stable_sort(v.begin(), v.end(), bruhat_like);
}

int cmd_enum(const std::string& what, const Options& o) {
    Sink sink(o.out);
    auto& os = sink.os();
    nlohmann::json arr = nlohmann::json::array();
    if (what == "nc") {
        require_n("enum nc", o.n, 8);
        auto ws = qfl::enumerate_nc(o.n);
        sort_for(ws, o.order, [](const qfl::Permutation& a, const qfl::Permutation& b) {
            return qfl::NoncrossingPartition(a).absolute_length() < qfl::NoncrossingPartition(b).absolute_length();
        });
        if (o.format == Format::Csv) os << "one_line,cycles\n";
        for (const auto& w : ws) {
            if (o.format == Format::Json) arr.push_back({{"one_line", w.one_line()}, {"cycles", w.cycle_string()}});
            else if (o.format == Format::Csv) os << w.one_line() << ',' << w.cycle_string() << '\n';
            else os << w.one_line() << "  " << w.cycle_string() << '\n';
        }
    } else if (what == "trees" || what == "forests") {
        require_n("enum " + what, o.n, 8);
        auto fs = what == "trees" ? qfl::enumerate_trees(o.n) : qfl::enumerate_forests(o.n);
        sort_for(fs, o.order, [](const qfl::BnForest& a, const qfl::BnForest& b) {
            return a.num_internal() < b.num_internal();
        });
        if (o.format == Format::Csv) os << "forest,internal,nc\n";
        for (const auto& f : fs) {
            auto w = qfl::for_to_nc(f);
            if (o.format == Format::Json)
                arr.push_back({{"forest", f.str()}, {"internal", f.num_internal()}, {"nc", w.one_line()}});
            else if (o.format == Format::Csv)
                os << '"' << f.str() << "\"," << f.num_internal() << ',' << w.one_line() << '\n';
            else os << f.str() << "  " << w.one_line() << '\n';
        }
    } else if (what == "faces" || what == "counts") {
        require_n("enum " + what, o.n, 7);
        auto faces = qfl::count_faces(o.n);
        auto forests = qfl::count_forests(o.n);
        bool both = what == "counts";
        if (o.format == Format::Csv) os << (both ? "n,k,faces,forests\n" : "n,k,count\n");
        for (int k = 0; k < o.n; ++k) {
            const auto& f = faces.by_k[k];
            const auto& c = forests.by_k[k];
            if (o.format == Format::Json) {
                nlohmann::json row{{"n", o.n}, {"k", k}};
                if (both) {
                    row["faces"] = f.get_str();
                    row["forests"] = c.get_str();
                } else {
                    row["count"] = f.get_str();
                }
                arr.push_back(std::move(row));
            } else if (o.format == Format::Csv) {
                os << o.n << ',' << k << ',' << f.get_str();
                if (both) os << ',' << c.get_str();
                os << '\n';
            } else {
                os << "k=" << k << "  " << f.get_str();
                if (both) os << "  " << c.get_str();
                os << '\n';
            }
        }
    } else {
        throw UsageError("unknown enum target: " + what);
    }
    if (o.format == Format::Json) os << arr.dump(2) << '\n';
    return 0;
}

struct PolyArgs {
    std::string w, reseq, nc, forest;
};

int cmd_poly(const std::string& kind, const PolyArgs& a, const Options& o, bool n_given) {
    qfl::MPoly p;
    std::string input;
    if (kind == "schubert") {
        if (a.w.empty()) throw UsageError("poly schubert needs --w");
        auto w = qfl::Permutation::parse(a.w);
        require_n("poly schubert", w.size(), 8);
        p = qfl::schubert_double(w);
        input = w.one_line();
    } else if (kind == "forest") {
        qfl::BnForest f;
        if (!a.reseq.empty() == !a.nc.empty()) throw UsageError("poly forest needs exactly one of --reseq, --nc");
        if (!a.reseq.empty()) {
            f = qfl::forest_from_reseq(qfl::ReseqWord::parse(a.reseq));
            if (!qfl::is_indexed_forest(f)) throw UsageError("word does not give an indexed forest: " + f.str());
            input = a.reseq;
        } else {
            auto w = qfl::Permutation::parse(a.nc);
            if (!qfl::is_noncrossing(w)) throw UsageError(w.one_line() + " is not noncrossing");
            f = qfl::forest_for_nc(w);
            input = w.one_line();
        }
        int n = n_given ? o.n : f.n();
        require_n("poly forest", n, 6);
        if (n < f.n()) throw UsageError("--n is smaller than the forest");
        p = qfl::forest_poly_double(f.padded(n), n);
    } else if (kind == "fundamental") {
        if (a.forest.empty() && a.reseq.empty()) throw UsageError("poly fundamental needs --forest or --reseq");
        auto f = a.forest.empty() ? qfl::forest_from_reseq(qfl::ReseqWord::parse(a.reseq)) : qfl::BnForest::parse(a.forest);
        input = a.forest.empty() ? a.reseq : a.forest;
        int n = n_given ? o.n : f.n();
        require_n("poly fundamental", n, 6);
        auto lt = qfl::lter(f);
        if (lt != std::vector<int>{n}) throw UsageError("fundamental needs a zigzag forest with LTer = {n}");
        p = qfl::fundamental_double(f, n);
    } else {
        throw UsageError("unknown poly kind: " + kind);
    }
    Sink sink(o.out);
    if (o.format == Format::Json)
        sink.os() << nlohmann::json{{"kind", kind}, {"input", input}, {"poly", p.str()}}.dump(2) << '\n';
    else if (o.format == Format::Csv)
        sink.os() << "kind,input,poly\n" << kind << ",\"" << input << "\",\"" << p.str() << "\"\n";
    else sink.os() << p.str() << '\n';
    return 0;
}

int cmd_verify(const std::string& suite, const Options& o, int samples) {
    if (!qfl::is_suite(suite)) throw UsageError("unknown suite: " + suite);
    qfl::SuiteParams p;
    p.n = o.n;
    p.seed = o.seed;
    p.jobs = o.jobs;
    if (samples > 0) p.samples = samples;
    qfl::Report r;
    try {
        r = qfl::run_suite(suite, p);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    std::string json = qfl::to_json(r).dump(2) + "\n";
    if (!o.out.empty()) {
        std::ofstream f(o.out);
        if (!f) throw UsageError("cannot open " + o.out);
        f << json;
    }
    if (o.format == Format::Json) {
        std::cout << json;
    } else if (o.format == Format::Csv) {
        std::cout << "suite,n,seed,cases,failures,passed\n"
                  << r.suite << ',' << r.n << ',' << r.seed << ',' << r.cases << ',' << r.failure_count << ','
                  << (r.passed() ? 1 : 0) << '\n';
    } else {
        std::cout << r.suite << " n=" << r.n << " seed=" << r.seed << ": " << r.cases << " cases, "
                  << r.failure_count << " failures -> " << (r.passed() ? "PASS" : "FAIL") << '\n';
        for (const auto& [k, v] : r.stats) std::cout << "  " << k << " = " << v << '\n';
        for (const auto& f : r.failures) std::cout << "  FAIL " << f.case_id << ": " << f.detail << '\n';
    }
    return r.passed() ? 0 : 1;
}

}  // namespace


int main(int argc, char** argv) {
    CLI::App app{"Combinatorics, polynomials and flag geometry of quasisymmetric flag varieties"};
    app.require_subcommand(1);
    Options o;
    std::map<std::string, Format> formats{{"text", Format::Text}, {"json", Format::Json}, {"csv", Format::Csv}};
    auto common = [&](CLI::App* c) {
        c->add_option("--n", o.n, "size parameter");
        c->add_option("--format", o.format, "text, json or csv")->transform(CLI::CheckedTransformer(formats));
        c->add_option("--out", o.out, "output file");
    };

    std::string what;
    auto* en = app.add_subcommand("enum", "enumerate nc, trees, forests, faces or counts");
    en->add_option("what", what)->required()->check(CLI::IsMember({"nc", "trees", "forests", "faces", "counts"}));
    common(en);
    en->add_option("--order", o.order, "lex (default) or length")->check(CLI::IsMember({"lex", "length"}));

    std::string kind;
    PolyArgs pa;
    auto* po = app.add_subcommand("poly", "double Schubert, forest or fundamental polynomials");
    po->add_option("kind", kind)->required()->check(CLI::IsMember({"schubert", "forest", "fundamental"}));
    po->add_option("--w", pa.w, "permutation in one-line notation");
    po->add_option("--reseq", pa.reseq, "RESeq word such as \"r1- e1\"");
    po->add_option("--nc", pa.nc, "noncrossing permutation in one-line notation");
    po->add_option("--forest", pa.forest, "forest such as \"B(1,2)\"");
    common(po);

    std::string suite;
    int samples = 0;
    auto* ve = app.add_subcommand("verify", "run a verification suite");
    ve->add_option("suite", suite)->required();
    common(ve);
    ve->add_option("--seed", o.seed, "random seed");
    ve->add_option("--jobs", o.jobs, "worker threads")->check(CLI::Range(1, 256));
    ve->add_option("--samples", samples, "orbit samples per forest");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }
    try {
        if (*en) return cmd_enum(what, o);
        if (*po) return cmd_poly(kind, pa, o, po->count("--n") > 0);
        if (*ve) return cmd_verify(suite, o, samples);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
