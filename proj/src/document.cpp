#include "prym/document.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace prym {

using nlohmann::json;

DoubleCover parse_cover_document(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::exception& ex) {
        throw CoverError(std::string("document parse error: ") + ex.what());
    }
    if (!doc.is_object()) throw CoverError("document: top level must be an object");
    if (!doc.contains("schemaVersion") || !doc["schemaVersion"].is_number_integer() ||
        doc["schemaVersion"].get<int>() != kSchemaVersion)
        throw CoverError("document: missing or unsupported schemaVersion");
    if (!doc.contains("vertices") || !doc["vertices"].is_array())
        throw CoverError("document: 'vertices' must be an array");
    if (!doc.contains("edges") || !doc["edges"].is_array())
        throw CoverError("document: 'edges' must be an array");

    DoubleCover c;
    for (const auto& v : doc["vertices"]) {
        if (!v.is_object() || !v.contains("id") || !v["id"].is_string())
            throw CoverError("document: vertex entries need a string 'id'");
        std::string id = v["id"].get<std::string>();
        if (c.base.has_vertex(id)) throw CoverError("document: duplicate vertex id '" + id + "'");
        c.base.add_vertex(id);
        if (v.contains("dilated") && v["dilated"].get<bool>()) c.dilated_vertices.insert(id);
    }
    for (const auto& e : doc["edges"]) {
        if (!e.is_object() || !e.contains("id") || !e["id"].is_string())
            throw CoverError("document: edge entries need a string 'id'");
        std::string id = e["id"].get<std::string>();
        if (c.base.has_edge(id)) throw CoverError("document: duplicate edge id '" + id + "'");
        if (!e.contains("ends") || !e["ends"].is_array() || e["ends"].size() != 2 ||
            !e["ends"][0].is_string() || !e["ends"][1].is_string())
            throw CoverError("document: edge '" + id + "' needs 'ends': [vertex, vertex]");
        std::string u = e["ends"][0].get<std::string>(), w = e["ends"][1].get<std::string>();
        if (!c.base.has_vertex(u) || !c.base.has_vertex(w))
            throw CoverError("document: edge '" + id + "' references an unknown vertex");
        c.base.add_edge(id, u, w);
        if (!e.contains("length") || !e["length"].is_string())
            throw CoverError("document: edge '" + id + "' needs a rational string 'length'");
        try {
            c.lengths[id] = rat_from_string(e["length"].get<std::string>());
        } catch (const std::invalid_argument& ex) {
            throw CoverError("document: edge '" + id + "' length: " + ex.what());
        }
        bool dilated = e.contains("dilated") && e["dilated"].get<bool>();
        if (dilated) c.dilated_edges.insert(id);
        bool free_edge = !dilated && !c.is_dilated_vertex(u) && !c.is_dilated_vertex(w);
        if (e.contains("sign")) {
            if (!free_edge)
                throw CoverError("document: edge '" + id + "' carries a sign but is not free");
            if (!e["sign"].is_number_integer() ||
                (e["sign"].get<int>() != 1 && e["sign"].get<int>() != -1))
                throw CoverError("document: edge '" + id + "' sign must be 1 or -1");
            c.sigma[id] = e["sign"].get<int>();
        } else if (free_edge) {
            throw CoverError("document: free edge '" + id + "' is missing its sign");
        }
    }
    return validate_cover(std::move(c));
}

DoubleCover load_cover_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::ios_base::failure("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_cover_document(buf.str());
}

std::string serialize_cover_document(const DoubleCover& c) {
    json doc;
    doc["schemaVersion"] = kSchemaVersion;
    doc["vertices"] = json::array();
    for (const auto& v : c.base.vertices)
        doc["vertices"].push_back({{"id", v}, {"dilated", c.is_dilated_vertex(v)}});
    doc["edges"] = json::array();
    for (const auto& e : c.base.edges) {
        json je = {{"id", e.id},
                   {"ends", {e.u, e.v}},
                   {"length", rat_to_string(c.lengths.at(e.id))},
                   {"dilated", c.is_dilated_edge(e.id)}};
        if (c.is_free_edge(e.id)) je["sign"] = c.edge_sign(e.id);
        doc["edges"].push_back(je);
    }
    return doc.dump(2) + "\n";
}

void write_cover_file(const DoubleCover& c, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::ios_base::failure("cannot open '" + path + "' for writing");
    out << serialize_cover_document(c);
    if (!out) throw std::ios_base::failure("write failed on '" + path + "'");
}

}  // namespace prym
