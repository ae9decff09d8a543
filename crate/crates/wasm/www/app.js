import init, { family_graph, compare_members, minimal_family } from "./pkg/lapco_wasm.js";

const SVG = "http://www.w3.org/2000/svg";
const num = (id) => Number(document.getElementById(id).value);

function draw(d) {
  const svg = document.createElementNS(SVG, "svg");
  svg.setAttribute("viewBox", "-1.15 -1.15 2.3 2.3");
  const onCycle = new Set(d.cycle);
  for (const [a, b] of d.edges) {
    const line = document.createElementNS(SVG, "line");
    const [x1, y1] = d.positions[a];
    const [x2, y2] = d.positions[b];
    Object.entries({ x1, y1, x2, y2 }).forEach(([k, v]) => line.setAttribute(k, v));
    const cyc = onCycle.has(a) && onCycle.has(b);
    line.setAttribute("stroke", cyc ? "#2a7" : "#555");
    line.setAttribute("stroke-width", cyc ? 0.025 : 0.015);
    svg.appendChild(line);
  }
  d.positions.forEach(([x, y], v) => {
    const dot = document.createElementNS(SVG, "circle");
    dot.setAttribute("cx", x);
    dot.setAttribute("cy", y);
    dot.setAttribute("r", 0.045);
    dot.setAttribute("fill", onCycle.has(v) ? "#2a7" : "#333");
    const title = document.createElementNS(SVG, "title");
    title.textContent = `vertex ${v}`;
    dot.appendChild(title);
    svg.appendChild(dot);
  });
  return svg;
}

function card(d, caption, extraClass) {
  const div = document.createElement("div");
  div.className = "card" + (extraClass ? " " + extraClass : "");
  div.appendChild(draw(d));
  const p = document.createElement("p");
  p.innerHTML = `${caption}<br>LEL = ${d.lel.toFixed(8)}<br><code>[${d.coefficients.join(", ")}]</code>`;
  div.appendChild(p);
  return div;
}

function guard(out, fn) {
  out.replaceChildren();
  try {
    fn();
  } catch (e) {
    const p = document.createElement("p");
    p.className = "error";
    p.textContent = String(e);
    out.appendChild(p);
  }
}

function showBuild() {
  const out = document.getElementById("b-out");
  guard(out, () => {
    const d = JSON.parse(family_graph(num("b-n"), num("b-l"), num("b-g"), num("b-p")));
    out.appendChild(card(d, d.polynomial));
  });
}

function showCompare() {
  const out = document.getElementById("c-out");
  guard(out, () => {
    const p = num("c-p"), q = num("c-q");
    const r = JSON.parse(compare_members(num("c-n"), num("c-l"), num("c-g"), p, q));
    const row = document.createElement("div");
    row.className = "row";
    row.appendChild(card(r.left, `p = ${p}`));
    row.appendChild(card(r.right, `q = ${q}`));
    const table = document.createElement("p");
    const cells = r.left.coefficients.map((c, k) => {
      const cls = r.left_below_at.includes(k) ? "less" : r.left_above_at.includes(k) ? "more" : "";
      return `<span class="${cls}">c<sub>${k}</sub>: ${c} / ${r.right.coefficients[k]}</span>`;
    });
    table.innerHTML = `verdict: <b>${r.verdict.replace("_", " ")}</b><br>${cells.join(" &middot; ")}`;
    out.append(row, table);
  });
}

function showMinimal() {
  const out = document.getElementById("m-out");
  guard(out, () => {
    const r = JSON.parse(minimal_family(num("m-n"), num("m-l"), num("m-g"), document.getElementById("m-r").value));
    const head = document.createElement("p");
    head.textContent =
      `${r.family_size} graphs, ${r.minimal.length} minimal; ` +
      `tail bound p = ${r.p_formula}; matches U^0..U^p: ${r.matches_prediction}`;
    const row = document.createElement("div");
    row.className = "row";
    for (const m of r.minimal) {
      row.appendChild(card(m.drawing, m.predicted ? "in U^0..U^p" : "other", m.predicted ? "predicted" : ""));
    }
    out.append(head, row);
  });
}

await init();
document.getElementById("b-go").onclick = showBuild;
document.getElementById("c-go").onclick = showCompare;
document.getElementById("m-go").onclick = showMinimal;
showBuild();
