import init, { space_report, family_sweep, root_system } from "./pkg/spos_wasm.js";

const FIXED = ["EI", "EII", "EIII", "EIV", "EV", "EVI", "EVII", "EVIII", "EIX", "FI", "FII", "G"];
const BY_N = ["AI", "AII", "DIII", "CI"];
const BY_PQ = ["AIII", "BDI", "CII"];

const $ = (id) => document.getElementById(id);

function fillSelect(el, names, chosen) {
  for (const name of names) {
    const opt = document.createElement("option");
    opt.textContent = name;
    opt.selected = name === chosen;
    el.appendChild(opt);
  }
}

function fail(el, e) {
  el.className = "err";
  el.textContent = String(e);
}

function ok(el, text) {
  el.className = "";
  el.textContent = text;
}

// Vertical bars; series is a list of {values, color}, where color may be a
// function of the bar index.
function bars(canvas, labels, series) {
  const ctx = canvas.getContext("2d");
  const w = canvas.width, h = canvas.height, pad = 30;
  ctx.clearRect(0, 0, w, h);
  const max = Math.max(1, ...series.flatMap((s) => s.values));
  const slot = (w - 2 * pad) / labels.length;
  const bw = Math.min(40, (slot * 0.8) / series.length);
  ctx.font = "11px system-ui";
  ctx.textAlign = "center";
  labels.forEach((label, i) => {
    const x0 = pad + i * slot + (slot - bw * series.length) / 2;
    series.forEach((s, j) => {
      const v = s.values[i];
      const bh = ((h - 2 * pad) * v) / max;
      ctx.fillStyle = typeof s.color === "function" ? s.color(i) : s.color;
      ctx.fillRect(x0 + j * bw, h - pad - bh, bw - 2, bh);
      ctx.fillStyle = "#222";
      ctx.fillText(v, x0 + j * bw + bw / 2, h - pad - bh - 3);
    });
    ctx.fillText(label, pad + i * slot + slot / 2, h - pad + 14);
  });
}

function runSpace() {
  const family = $("sp-family").value;
  try {
    const v = JSON.parse(space_report(family, +$("sp-n").value, +$("sp-p").value, +$("sp-q").value));
    const rep = v.report;
    let summary = `${v.label}: ambient ${v.ambient}, rank ${rep.r}, dimension ${rep.dimension}, s = ${rep.s}`;
    if (rep.s !== v.s_table) summary += ` (table formula gives ${v.s_table})`;
    ok($("sp-summary"), summary);
    const labels = rep.s_k.map((_, k) => `s_${k + 1}`);
    const color = (k) => (rep.argmax.includes(k + 1) ? "#2a6fdb" : "#9bb8e8");
    bars($("sp-chart"), labels, [{ values: rep.s_k, color }]);
    const lines = v.delta_sets.map((set, k) => `Δ_${k + 1}⁺ (${set.length}): ${set.join(" ")}`);
    ok($("sp-detail"), lines.join("\n"));
  } catch (e) {
    fail($("sp-summary"), e);
  }
}

function runSweep() {
  const family = $("sw-family").value;
  try {
    const pts = JSON.parse(family_sweep(family, +$("sw-lo").value, +$("sw-hi").value));
    bars($("sw-chart"), pts.map((p) => p.params || family), [
      { values: pts.map((p) => p.s), color: "#2a6fdb" },
      { values: pts.map((p) => p.s_table), color: "#e8a33d" },
    ]);
    const off = pts.filter((p) => p.s !== p.s_table).map((p) => `${p.params}: ${p.s} vs ${p.s_table}`);
    ok($("sw-summary"), off.length ? `differs from the table formula at ${off.join(", ")}` : "enumeration matches the table formula everywhere");
  } catch (e) {
    fail($("sw-summary"), e);
  }
}

function runRoots() {
  try {
    const v = JSON.parse(root_system($("rt-type").value.trim()));
    const top = v.highest_root ? `, highest root (${v.highest_root.join(",")})` : "";
    ok($("rt-summary"), `${v.lie_type}: ${v.count} positive roots${top}`);
    bars($("rt-chart"), v.by_height.map((_, i) => String(i + 1)), [
      { values: v.by_height.map((roots) => roots.length), color: "#5a9e5a" },
    ]);
    ok($("rt-detail"), v.by_height.map((roots, i) => `${i + 1}: ${roots.map((r) => `(${r.join(",")})`).join(" ")}`).join("\n"));
  } catch (e) {
    fail($("rt-summary"), e);
  }
}

await init();
const all = [...BY_N.slice(0, 2), ...BY_PQ.slice(0, 2), ...BY_N.slice(2), BY_PQ[2], ...FIXED];
fillSelect($("sp-family"), all, "DIII");
fillSelect($("sw-family"), [...BY_N, ...BY_PQ], "DIII");
$("sp-go").onclick = runSpace;
$("sw-go").onclick = runSweep;
$("rt-go").onclick = runRoots;
runSpace();
runSweep();
runRoots();
