import init, { expand_series, map_partition, verify_identity, list_identities } from "./pkg/qpartition_web.js";

const $ = (id) => document.getElementById(id);
const num = (id) => Number($(id).value);

function show(id, render) {
  const out = $(id);
  try {
    out.replaceChildren(...render());
  } catch (e) {
    const p = document.createElement("p");
    p.className = "fail";
    p.textContent = String(e);
    out.replaceChildren(p);
  }
}

function el(tag, text, cls) {
  const e = document.createElement(tag);
  if (text !== undefined) e.textContent = text;
  if (cls) e.className = cls;
  return e;
}

// one row per x-degree, one column per q-exponent with a nonzero coefficient somewhere
function expansionTable({ trunc, terms }) {
  const qs = [...new Set(terms.map((t) => t.qpow))].sort((a, b) => a - b);
  const xs = [...new Set(terms.map((t) => t.xpow))].sort((a, b) => a - b);
  const table = el("table");
  const head = el("tr");
  head.append(el("th", ""), ...qs.map((q) => el("th", `q^${q}`)));
  table.append(head);
  for (const x of xs) {
    const row = el("tr");
    row.append(el("th", `x^${x}`));
    for (const q of qs) {
      const t = terms.find((t) => t.xpow === x && t.qpow === q);
      row.append(el("td", t ? t.coeff : ""));
    }
    table.append(row);
  }
  return [el("p", `coefficients below q^${trunc}`), table];
}

function expand() {
  show("ex-out", () => {
    const series = $("ex-series").value;
    const json = expand_series(series, $("ex-params").value, num("ex-order"), num("ex-xdeg"));
    return expansionTable(JSON.parse(json));
  });
}

function mapTriangle() {
  show("tr-out", () => {
    const m = JSON.parse(map_partition($("tr-parts").value, num("tr-d")));
    const size = (p) => p.reduce((a, b) => a + b, 0);
    return [
      el("p", `${m.source.join(" + ")} (size ${size(m.source)})`),
      el("pre", m.source_diagram),
      el("p", `maps to ${m.image.join(" + ") || "the empty partition"} (size ${size(m.image)})`),
      el("pre", m.image_diagram),
    ];
  });
}

function verify() {
  show("vf-out", () => {
    const start = performance.now();
    const r = JSON.parse(verify_identity($("vf-id").value, num("vf-order"), num("vf-xdeg")));
    const ms = Math.round(performance.now() - start);
    const line = el("p", `${r.status.toUpperCase()} below q^${r.trunc}, x^${r.xdeg_bound} (${ms} ms)`, r.status);
    if (!r.first_discrepancy) return [line];
    const d = r.first_discrepancy;
    return [line, el("pre", `x^${d.xpow} q^${d.qpow}: lhs ${d.lhs_coeff}, rhs ${d.rhs_coeff}\n${d.context ?? ""}`)];
  });
}

await init();

const entries = JSON.parse(list_identities());
const select = $("vf-id");
for (const e of entries) select.append(new Option(e.id, e.id));
const cite = () => ($("vf-citation").textContent = entries.find((e) => e.id === select.value).citation);
select.addEventListener("change", cite);
cite();

$("ex-run").addEventListener("click", expand);
$("tr-run").addEventListener("click", mapTriangle);
$("vf-run").addEventListener("click", verify);
expand();
mapTriangle();
