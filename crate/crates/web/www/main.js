import init, { presets, classify, check, lift } from "./pkg/semiring_web.js";

const $ = (id) => document.getElementById(id);
let current = null;

function kind(e) {
  if (e.idempotent) return "idempotent";
  if (e.nilpotent) return "nilpotent";
  if (e.nilidempotent) return "nilidempotent";
  return "other";
}

function cell(tag, text, cls) {
  const el = document.createElement(tag);
  el.textContent = text;
  if (cls) el.className = cls;
  return el;
}

function drawTable(table, rows, elements) {
  table.replaceChildren();
  const head = document.createElement("tr");
  head.append(cell("th", ""));
  elements.forEach((e) => head.append(cell("th", e.label, kind(e))));
  table.append(head);
  rows.forEach((row, i) => {
    const tr = document.createElement("tr");
    const th = cell("th", elements[i].label, kind(elements[i]));
    if (elements[i].nilidempotent) th.onclick = () => showLift(elements[i].label);
    tr.append(th);
    row.forEach((v) => tr.append(cell("td", elements[v].label, kind(elements[v]))));
    table.append(tr);
  });
}

function showLift(label) {
  const doc = JSON.parse(lift(current, label));
  const out = $("lift");
  if (doc.error) {
    out.innerHTML = "";
    out.append(cell("p", `lift ${label}: ${doc.error}`, "error"));
    return;
  }
  const lines = [`g₀ = ${doc.g0}, defect z₀ = ${doc.z0}`];
  doc.steps.forEach((s, k) => lines.push(`step ${k + 1}: g = ${s.g}, z = ${s.z}, w = ${s.w}`));
  lines.push(`f = ${doc.f} is idempotent; correction ${doc.correction}; ${doc.iterations} iteration(s)`);
  out.replaceChildren(cell("h2", `Lifting ${label}`), cell("pre", lines.join("\n")));
}

function showTheorems(name) {
  const doc = JSON.parse(check(name));
  const out = $("theorems");
  out.replaceChildren(cell("h2", "Theorem checks"));
  for (const r of doc.reports) {
    out.append(cell("h3", `${r.theorem}: ${r.verdict}`, `verdict-${r.verdict}`));
    const ul = document.createElement("ul");
    for (const [group, checks] of [["assume", r.hypotheses], ["conclude", r.conclusions]]) {
      for (const c of checks) {
        const w = c.witness ? ` (witness ${c.witness.join(", ")})` : "";
        ul.append(cell("li", `${group}: ${c.name}${w}`, c.holds ? "" : "no"));
      }
    }
    out.append(ul);
  }
}

function load(name) {
  const doc = JSON.parse(classify(name));
  if (doc.error) {
    $("summary").replaceChildren(cell("p", doc.error, "error"));
    return;
  }
  current = name;
  const count = (k) => doc.elements.filter((e) => e[k]).length;
  $("summary").replaceChildren(cell("p",
    `${name}: order ${doc.order}, ${count("idempotent")} idempotent, ${count("nilpotent")} nilpotent, ` +
    `${count("nilidempotent")} nilidempotent; ${doc.commutative ? "commutative" : "not commutative"}, ` +
    `${doc.boolean ? "Boolean" : "not Boolean"}`));
  drawTable($("add"), doc.add, doc.elements);
  drawTable($("mul"), doc.mul, doc.elements);
  $("lift").replaceChildren();
  showTheorems(name);
}

await init();
for (const p of JSON.parse(presets())) {
  const opt = document.createElement("option");
  opt.value = p;
  $("suggested").append(opt);
}
$("pick").onsubmit = (ev) => {
  ev.preventDefault();
  load($("name").value.trim());
};
load($("name").value);
