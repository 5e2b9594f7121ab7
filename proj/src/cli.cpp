#include "primepoly/cli.hpp"

#include "primepoly/faces.hpp"
#include "primepoly/general.hpp"
#include "primepoly/oracle.hpp"
#include "primepoly/polytope.hpp"
#include "primepoly/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

namespace primepoly::cli {

namespace {

using json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct Options {
    int d = 0;
    int e = 0;
    std::string base = "2";
    std::string format = "text";
    std::string output;
    std::string method = "formula";
    std::string bases = "2,3,5/2";
    std::string n;
    std::string evals;
    std::string file;
    std::string det;
};

ExactRat parse_rational_arg(const std::string& text, const std::string& what) {
    try {
        return parse_rational(text);
    } catch (const std::invalid_argument& ex) {
        throw UsageError(what + ": " + ex.what());
    }
}

ExactRat parse_base(const std::string& text) {
    ExactRat t = parse_rational_arg(text, "base");
    if (t <= 1) throw UsageError("base t must be > 1, got " + text);
    return t;
}

std::vector<ExactRat> parse_list(const std::string& text, const std::string& what) {
    std::vector<ExactRat> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_rational_arg(item, what));
    if (out.empty()) throw UsageError(what + ": empty list");
    return out;
}

ExactInt parse_integer_arg(const std::string& text, const std::string& what) {
    const ExactRat q = parse_rational_arg(text, what);
    if (q.get_den() != 1) throw UsageError(what + " must be an integer");
    return q.get_num();
}

void require_prime_power(const Options& o) {
    if (o.d < 2) throw UsageError("--d must be >= 2");
    if (o.e < 2) throw UsageError("--e must be >= 2");
}

void require_format(const Options& o, std::initializer_list<const char*> allowed) {
    for (const char* f : allowed) {
        if (o.format == f) return;
    }
    throw UsageError("format '" + o.format + "' not supported by this command");
}

json point_json(const RatVector& p) {
    json arr = json::array();
    for (const ExactRat& x : p) arr.push_back(format_rational(x));
    return arr;
}

std::string point_text(const RatVector& p) {
    std::string out = "(";
    for (std::size_t i = 0; i < p.size(); ++i) out += (i ? ", " : "") + p[i].get_str();
    return out + ")";
}

std::string exponents_text(const Exponents& beta) {
    std::string out = "(";
    for (std::size_t i = 0; i < beta.size(); ++i) out += (i ? "," : "") + std::to_string(beta[i]);
    return out + ")";
}

std::string indices_text(const IndexSet& idx) {
    std::string out;
    for (std::size_t i = 0; i < idx.size(); ++i) out += (i ? " " : "") + std::to_string(idx[i]);
    return out;
}

const char* kind_name(InequalityKind kind) {
    switch (kind) {
        case InequalityKind::Upper: return "upper";
        case InequalityKind::Lower: return "lower";
        case InequalityKind::Regular: return "regular";
    }
    return "?";
}

const char* face_class_name(FaceClass c) {
    switch (c) {
        case FaceClass::Vertex: return "vertex";
        case FaceClass::Regular: return "regular";
        case FaceClass::ExceptionalInfinity: return "exceptional-infinity";
        case FaceClass::ExceptionalIntersection: return "exceptional-intersection";
    }
    return "?";
}

void describe_inequality(json& j, const Inequality& ineq) {
    j["kind"] = kind_name(ineq.kind);
    if (ineq.kind == InequalityKind::Lower) j["coordinate"] = ineq.coordinate;
    if (ineq.kind == InequalityKind::Regular) {
        j["alpha"] = ineq.regular.alpha;
        j["lambda"] = ineq.regular.lambda;
        j["mu"] = ineq.regular.mu;
    }
}

void write_cdd_hrep(std::ostream& os, const std::vector<Inequality>& rows, int d) {
    os << "H-representation\nbegin\n" << rows.size() << ' ' << d + 1 << " rational\n";
    for (const Inequality& ineq : rows) {
        os << ineq.constant().get_str();
        for (const ExactRat& a : ineq.coefficients()) os << ' ' << a.get_str();
        os << '\n';
    }
    os << "end\n";
}

int cmd_vertices(const Options& o, std::ostream& os) {
    require_prime_power(o);
    require_format(o, {"text", "json", "cdd"});
    const ExactRat t = parse_base(o.base);
    const VertexSet vertices(o.d, o.e);
    const auto points = vertices.evaluate(t);

    if (o.format == "json") {
        json j{{"d", o.d}, {"e", o.e}, {"t", format_rational(t)}, {"vertices", json::array()}};
        for (std::size_t i = 0; i < points.size(); ++i) {
            j["vertices"].push_back({{"index", i}, {"exponents", vertices[i]}, {"point", point_json(points[i])}});
        }
        os << j.dump(2) << '\n';
    } else if (o.format == "cdd") {
        os << "V-representation\nbegin\n" << points.size() << ' ' << o.d + 1 << " rational\n";
        for (const RatVector& p : points) {
            os << '1';
            for (const ExactRat& x : p) os << ' ' << x.get_str();
            os << '\n';
        }
        os << "end\n";
    } else {
        for (std::size_t i = 0; i < points.size(); ++i) {
            os << i << ": beta=" << exponents_text(vertices[i]) << " x=" << point_text(points[i]) << '\n';
        }
    }
    return kExitOk;
}

int cmd_hrep(const Options& o, std::ostream& os) {
    require_prime_power(o);
    require_format(o, {"text", "json", "cdd"});
    const ExactRat t = parse_base(o.base);
    const auto rows = hrep(o.d, o.e, t);

    if (o.format == "json") {
        json j{{"d", o.d}, {"e", o.e}, {"t", format_rational(t)}, {"inequalities", json::array()}};
        for (const Inequality& ineq : rows) {
            json item;
            describe_inequality(item, ineq);
            item["redundant"] = ineq.redundant;
            item["constant"] = format_rational(ineq.constant());
            item["coefficients"] = point_json(ineq.coefficients());
            j["inequalities"].push_back(std::move(item));
        }
        os << j.dump(2) << '\n';
    } else if (o.format == "cdd") {
        if (o.d == 2) os << "* rows 2 and 3 (x_i >= 1) are redundant for d = 2\n";
        write_cdd_hrep(os, rows, o.d);
    } else {
        for (std::size_t k = 0; k < rows.size(); ++k) os << k << ": " << rows[k].describe() << '\n';
    }
    return kExitOk;
}

int cmd_facets(const Options& o, std::ostream& os) {
    require_prime_power(o);
    require_format(o, {"text", "json", "cdd"});
    const ExactRat t = parse_base(o.base);
    const auto list = facets(o.d, o.e, t);

    if (o.format == "json") {
        json j{{"d", o.d}, {"e", o.e}, {"t", format_rational(t)}, {"facets", json::array()}};
        for (const FacetDescriptor& f : list) {
            json item;
            describe_inequality(item, f.inequality);
            item["vertex_indices"] = f.vertices;
            j["facets"].push_back(std::move(item));
        }
        os << j.dump(2) << '\n';
    } else if (o.format == "cdd") {
        std::vector<Inequality> rows;
        for (const FacetDescriptor& f : list) rows.push_back(f.inequality);
        write_cdd_hrep(os, rows, o.d);
    } else {
        for (std::size_t k = 0; k < list.size(); ++k) {
            os << k << ": " << list[k].inequality.describe() << " | vertices " << indices_text(list[k].vertices)
               << '\n';
        }
    }
    return kExitOk;
}

int cmd_fvector(const Options& o, std::ostream& os) {
    require_prime_power(o);
    require_format(o, {"text", "json"});
    FVector f;
    if (o.method == "formula") {
        f = f_vector_formula(o.d, o.e);
    } else if (o.method == "lattice") {
        f = f_vector_from_faces(enumerate_faces(o.d, o.e).faces, o.d);
    } else if (o.method == "oracle") {
        const ExactRat t = parse_base(o.base);
        try {
            f = brute_face_lattice(PointCloud{VertexSet(o.d, o.e).evaluate(t)}).f_vector;
        } catch (const OracleTooLarge& ex) {
            throw UsageError(std::string("oracle method refused: ") + ex.what());
        }
    } else {
        throw UsageError("unknown method '" + o.method + "'");
    }

    if (o.format == "json") {
        json counts = json::array();
        for (const ExactInt& x : f.f) counts.push_back(x.get_ui());
        os << json{{"d", o.d}, {"e", o.e}, {"method", o.method}, {"f_vector", counts}}.dump(2) << '\n';
    } else {
        os << f.str() << '\n';
    }
    return kExitOk;
}

int cmd_faces(const Options& o, std::ostream& os) {
    require_prime_power(o);
    require_format(o, {"text", "json"});
    const FaceEnumeration faces = enumerate_faces(o.d, o.e);
    const FVector f = f_vector_from_faces(faces.faces, o.d);

    if (o.format == "json") {
        json j{{"d", o.d}, {"e", o.e}, {"faces", json::array()}};
        for (const Face& face : faces.faces) {
            j["faces"].push_back(
                {{"dim", face.dim}, {"class", face_class_name(face.face_class)}, {"vertex_indices", face.vertices}});
        }
        json counts = json::array();
        for (const ExactInt& x : f.f) counts.push_back(x.get_ui());
        j["f_vector"] = counts;
        j["duplicates"] = faces.duplicates;
        os << j.dump(2) << '\n';
    } else {
        for (const Face& face : faces.faces) {
            os << "dim=" << face.dim << " class=" << face_class_name(face.face_class) << " vertices "
               << indices_text(face.vertices) << '\n';
        }
        os << "f-vector: " << f.str() << '\n';
    }
    return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& os) {
    require_prime_power(o);
    std::vector<ExactRat> bases = parse_list(o.bases, "bases");
    for (const ExactRat& t : bases) {
        if (t <= 1) throw UsageError("every base must be > 1");
    }
    const VerificationReport report = verify_instance(o.d, o.e, bases);
    report.write(os);
    return report.passed() ? kExitOk : kExitVerificationFailed;
}

int cmd_minimality(const Options& o, std::ostream& os) {
    require_prime_power(o);
    require_format(o, {"text", "json"});
    const ExactRat t = parse_base(o.base);
    const auto rows = hrep(o.d, o.e, t);
    const auto certs = minimality_certificate(o.d, o.e, t);

    bool as_expected = true;
    json j{{"d", o.d}, {"e", o.e}, {"t", format_rational(t)}, {"certificates", json::array()}};
    std::ostringstream text;
    for (const FacetCertificate& c : certs) {
        const Inequality& ineq = rows[c.inequality];
        as_expected = as_expected && c.passed() == !ineq.redundant;
        json item;
        describe_inequality(item, ineq);
        item["passed"] = c.passed();
        item["expected"] = !ineq.redundant;
        item["sharp_rank"] = c.sharp_rank;
        j["certificates"].push_back(std::move(item));
        text << (c.passed() ? "PASS " : "FAIL ") << ineq.describe() << " (sharp set rank " << c.sharp_rank << ")\n";
    }
    j["matches_expectation"] = as_expected;
    if (o.format == "json") {
        os << j.dump(2) << '\n';
    } else {
        os << text.str() << (as_expected ? "minimality: as expected" : "minimality: UNEXPECTED") << '\n';
    }
    return as_expected ? kExitOk : kExitVerificationFailed;
}

int cmd_general(const Options& o, std::ostream& os) {
    require_format(o, {"text", "json", "cdd"});
    if (o.n.empty()) throw UsageError("--n is required");
    const ExactInt n = parse_integer_arg(o.n, "--n");
    if (n < 2) throw UsageError("--n must be >= 2");
    if (o.d < 1) throw UsageError("--d must be >= 1");

    PointCloud cloud;
    if (o.evals.empty()) {
        cloud = general_polytope_vertices(n, o.d);
    } else {
        const auto values = parse_list(o.evals, "--eval");
        if (values.size() != prime_factorize(n).size()) throw UsageError("--eval needs one value per distinct prime");
        for (const ExactRat& v : values) {
            if (v <= 0) throw UsageError("--eval values must be positive");
        }
        cloud = general_polytope_vertices(n, o.d, values);
    }

    std::string facet_note;
    std::optional<std::size_t> facet_count;
    try {
        facet_count = brute_facets(cloud).size();
    } catch (const NotFullDimensional&) {
        facet_note = "not full-dimensional";
    } catch (const OracleTooLarge&) {
        facet_note = "above oracle size limit";
    }

    if (o.format == "json") {
        json j{{"n", n.get_str()}, {"d", o.d}, {"vertices", json::array()}};
        for (const RatVector& p : cloud.points) j["vertices"].push_back(point_json(p));
        if (facet_count) j["facets"] = *facet_count;
        else j["facets"] = nullptr;
        os << j.dump(2) << '\n';
    } else if (o.format == "cdd") {
        os << "V-representation\nbegin\n" << cloud.points.size() << ' ' << o.d + 1 << " rational\n";
        for (const RatVector& p : cloud.points) {
            os << '1';
            for (const ExactRat& x : p) os << ' ' << x.get_str();
            os << '\n';
        }
        os << "end\n";
    } else {
        os << "P(" << n.get_str() << "," << o.d << "): " << cloud.points.size() << " vertices\n";
        for (const RatVector& p : cloud.points) os << point_text(p) << '\n';
        os << "facets: " << (facet_count ? std::to_string(*facet_count) : facet_note) << '\n';
    }
    return kExitOk;
}

SymmetricIntMatrix read_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open matrix file '" + path + "'");
    try {
        const json j = json::parse(in);
        const long size = j.at("size").get<long>();
        const json& entries = j.at("entries");
        if (size < 1 || !entries.is_array() || entries.size() != static_cast<std::size_t>(size)) {
            throw UsageError("matrix file: 'entries' must have 'size' rows");
        }
        IntMatrix m(static_cast<std::size_t>(size), static_cast<std::size_t>(size));
        for (std::size_t i = 0; i < m.rows(); ++i) {
            const json& row = entries[i];
            if (!row.is_array() || row.size() != m.cols()) throw UsageError("matrix file: ragged row");
            for (std::size_t k = 0; k < m.cols(); ++k) {
                if (!row[k].is_number_integer()) throw UsageError("matrix file: entries must be integers");
                m(i, k) = static_cast<long>(row[k].get<long long>());
            }
        }
        return SymmetricIntMatrix(std::move(m));
    } catch (const json::exception& ex) {
        throw UsageError(std::string("matrix file: ") + ex.what());
    } catch (const std::invalid_argument& ex) {
        throw UsageError(std::string("matrix file: ") + ex.what());
    }
}

int cmd_matrix(const Options& o, std::ostream& os) {
    require_format(o, {"text", "json"});
    if (o.file.empty()) throw UsageError("--file is required");
    if (o.det.empty()) throw UsageError("--det is required");
    const SymmetricIntMatrix a = read_matrix_file(o.file);
    const ExactInt n = parse_integer_arg(o.det, "--det");
    if (n < 1) throw UsageError("--det must be >= 1");

    const CompletionSearch search = search_completions(a, n);
    PointCloud cloud;
    for (const auto& c : search.completions) {
        RatVector p;
        for (const ExactInt& v : c.diagonal) p.emplace_back(v);
        cloud.points.push_back(std::move(p));
    }
    std::vector<bool> vertex;
    for (std::size_t i = 0; i < cloud.points.size(); ++i) vertex.push_back(is_vertex(i, cloud));
    const auto certified = static_cast<std::size_t>(std::count(vertex.begin(), vertex.end(), true));
    const bool all = certified == vertex.size();

    if (o.format == "json") {
        json j{{"size", a.size()}, {"det", n.get_str()}, {"completions", json::array()}};
        for (std::size_t i = 0; i < search.completions.size(); ++i) {
            json diag = json::array();
            for (const ExactInt& v : search.completions[i].diagonal) diag.push_back(v.get_str());
            j["completions"].push_back({{"diagonal", diag}, {"is_vertex", static_cast<bool>(vertex[i])}});
        }
        j["all_vertices"] = all;
        j["search_bound"] = search.bound.get_str();
        os << j.dump(2) << '\n';
    } else {
        os << "completions: " << search.completions.size() << '\n';
        for (std::size_t i = 0; i < search.completions.size(); ++i) {
            RatVector p = cloud.points[i];
            os << "D = " << point_text(p) << (vertex[i] ? " vertex" : " NOT a vertex") << '\n';
        }
        os << "certified vertices: " << certified << "/" << vertex.size() << '\n';
        os << "search bound: " << search.bound.get_str() << '\n';
    }
    return all ? kExitOk : kExitVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Polytopes of vector-factorisations of prime powers, in exact arithmetic", "primepoly"};
    app.require_subcommand(1);
    Options o;

    auto add_de = [&](CLI::App* sub) {
        sub->add_option("--d", o.d, "dimension d >= 2")->required();
        sub->add_option("--e", o.e, "exponent e >= 2")->required();
    };
    auto add_base = [&](CLI::App* sub) { sub->add_option("--t", o.base, "rational base t > 1 (\"num/den\")"); };
    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", o.format, "json | cdd | text");
        sub->add_option("--output", o.output, "write to this file instead of stdout");
    };

    struct Command {
        CLI::App* app;
        std::function<int(const Options&, std::ostream&)> fn;
    };
    std::vector<Command> commands;

    auto* vertices = app.add_subcommand("vertices", "vertex list");
    add_de(vertices), add_base(vertices), add_format(vertices);
    commands.push_back({vertices, cmd_vertices});

    auto* hrep_cmd = app.add_subcommand("hrep", "facet inequalities");
    add_de(hrep_cmd), add_base(hrep_cmd), add_format(hrep_cmd);
    commands.push_back({hrep_cmd, cmd_hrep});

    auto* facets_cmd = app.add_subcommand("facets", "facets with their vertex sets");
    add_de(facets_cmd), add_base(facets_cmd), add_format(facets_cmd);
    commands.push_back({facets_cmd, cmd_facets});

    auto* fvector = app.add_subcommand("fvector", "f-vector");
    add_de(fvector), add_base(fvector), add_format(fvector);
    fvector->add_option("--method", o.method, "formula | lattice | oracle");
    commands.push_back({fvector, cmd_fvector});

    auto* faces_cmd = app.add_subcommand("faces", "all faces with vertex sets");
    add_de(faces_cmd), add_format(faces_cmd);
    commands.push_back({faces_cmd, cmd_faces});

    auto* verify = app.add_subcommand("verify", "cross-check closed forms against the oracle");
    add_de(verify);
    verify->add_option("--bases", o.bases, "comma-separated bases, e.g. 2,3,5/2");
    verify->add_option("--output", o.output, "write the report to this file");
    commands.push_back({verify, cmd_verify});

    auto* minimality = app.add_subcommand("minimality", "facet certificates for every inequality");
    add_de(minimality), add_base(minimality), add_format(minimality);
    commands.push_back({minimality, cmd_minimality});

    auto* general = app.add_subcommand("general", "vertices of P(N, d) for arbitrary N");
    general->add_option("--n", o.n, "N >= 2")->required();
    o.d = 2;
    general->add_option("--d", o.d, "dimension (default 2)");
    general->add_option("--eval", o.evals, "comma-separated values replacing the primes of N");
    add_format(general);
    commands.push_back({general, cmd_general});

    auto* matrix = app.add_subcommand("matrix", "diagonal completions D_A(N) of a symmetric matrix");
    matrix->add_option("--file", o.file, "matrix JSON {\"size\": d, \"entries\": [[...]]}")->required();
    matrix->add_option("--det", o.det, "determinant N >= 1")->required();
    add_format(matrix);
    commands.push_back({matrix, cmd_matrix});

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& ex) {
        const int code = app.exit(ex, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    for (const Command& c : commands) {
        if (!c.app->parsed()) continue;
        try {
            std::ostringstream buffer;
            const int code = c.fn(o, buffer);
            if (o.output.empty()) {
                out << buffer.str();
            } else {
                std::ofstream file(o.output, std::ios::binary);
                if (!file) throw UsageError("cannot write '" + o.output + "'");
                file << buffer.str();
            }
            return code;
        } catch (const UsageError& ex) {
            err << "error: " << ex.what() << '\n';
            return kExitUsage;
        } catch (const std::invalid_argument& ex) {
            err << "error: " << ex.what() << '\n';
            return kExitUsage;
        }
    }
    return kExitUsage;
}

}  // namespace primepoly::cli
