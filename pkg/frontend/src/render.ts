import { FacetDelta } from "./session.js";
import { ScoreResponse } from "./types.js";

// Every renderer here is a pure function from response data to markup, so
// the panels can be snapshot-tested without a DOM. Displayed numbers are
// stringified server values, never recomputed on the client; only geometry
// (coordinates, bar widths) is derived locally.

export function escapeHtml(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;")
    .replace(/'/g, "&#39;");
}

function clamp01(value: number): number {
  if (Number.isNaN(value)) {
    return 0;
  }
  return Math.min(1, Math.max(0, value));
}

function signed(value: number): string {
  return value > 0 ? `+${String(value)}` : String(value);
}

const GAUGE_RADIUS = 70;
const GAUGE_ARC = Math.PI * GAUGE_RADIUS;

export function renderGauge(response: ScoreResponse): string {
  const fraction = clamp01(response.quality_score);
  const filled = (fraction * GAUGE_ARC).toFixed(1);
  const track = GAUGE_ARC.toFixed(1);
  const arc = `M 30 100 A ${GAUGE_RADIUS} ${GAUGE_RADIUS} 0 0 1 170 100`;
  return [
    `<svg class="gauge" viewBox="0 0 200 118" role="img" aria-label="quality score ${escapeHtml(String(response.quality_score))}">`,
    `<path class="gauge-track" d="${arc}" fill="none" stroke-width="14" stroke-linecap="round"></path>`,
    `<path class="gauge-fill" d="${arc}" fill="none" stroke-width="14" stroke-linecap="round" stroke-dasharray="${filled} ${track}"></path>`,
    `<text class="gauge-value" x="100" y="92" text-anchor="middle">${escapeHtml(String(response.quality_score))}</text>`,
    `<text class="gauge-caption" x="100" y="112" text-anchor="middle">quality score (model v${escapeHtml(String(response.model_version))})</text>`,
    `</svg>`,
  ].join("");
}

const RADAR_CENTER_X = 180;
const RADAR_CENTER_Y = 135;
const RADAR_RADIUS = 85;
const RADAR_LABEL_RADIUS = 102;
const RADAR_RINGS = [25, 50, 75, 100];

function radarPoint(index: number, count: number, radius: number): { x: number; y: number } {
  const angle = -Math.PI / 2 + (2 * Math.PI * index) / count;
  return {
    x: RADAR_CENTER_X + radius * Math.cos(angle),
    y: RADAR_CENTER_Y + radius * Math.sin(angle),
  };
}

function anchorFor(x: number): string {
  if (Math.abs(x - RADAR_CENTER_X) < 1) {
    return "middle";
  }
  return x > RADAR_CENTER_X ? "start" : "end";
}

export function renderRadar(response: ScoreResponse): string {
  const entries = Object.entries(response.facets);
  const count = Math.max(entries.length, 1);
  const parts: string[] = [
    `<svg class="radar" viewBox="0 0 360 270" role="img" aria-label="facet percentiles">`,
  ];
  for (const ring of RADAR_RINGS) {
    const ringPoints = entries
      .map((_, i) => radarPoint(i, count, (RADAR_RADIUS * ring) / 100))
      .map((p) => `${p.x.toFixed(1)},${p.y.toFixed(1)}`)
      .join(" ");
    parts.push(`<polygon class="radar-ring" points="${ringPoints}" fill="none"></polygon>`);
  }
  entries.forEach((_, i) => {
    const tip = radarPoint(i, count, RADAR_RADIUS);
    parts.push(
      `<line class="radar-axis" x1="${RADAR_CENTER_X}" y1="${RADAR_CENTER_Y}" x2="${tip.x.toFixed(1)}" y2="${tip.y.toFixed(1)}"></line>`
    );
  });
  const valuePoints = entries
    .map(([, facet], i) =>
      radarPoint(i, count, RADAR_RADIUS * clamp01(facet.percentile / 100))
    )
    .map((p) => `${p.x.toFixed(1)},${p.y.toFixed(1)}`)
    .join(" ");
  parts.push(`<polygon class="radar-value" points="${valuePoints}"></polygon>`);
  entries.forEach(([name, facet], i) => {
    const label = radarPoint(i, count, RADAR_LABEL_RADIUS);
    const anchor = anchorFor(label.x);
    parts.push(
      `<text class="radar-label" x="${label.x.toFixed(1)}" y="${label.y.toFixed(1)}" text-anchor="${anchor}">` +
        `<tspan class="radar-facet">${escapeHtml(name)}</tspan>` +
        `<tspan class="radar-percentile" x="${label.x.toFixed(1)}" dy="11">${escapeHtml(String(facet.percentile))}</tspan>` +
        `</text>`
    );
  });
  parts.push(`</svg>`);
  return parts.join("");
}

export function renderContributions(response: ScoreResponse): string {
  if (response.top_contributions.length === 0) {
    return `<p class="empty-note">No contributions to show.</p>`;
  }
  const maxAbs = Math.max(
    ...response.top_contributions.map((c) => Math.abs(c.contribution))
  );
  const rows = response.top_contributions.map((c) => {
    const width = maxAbs > 0 ? ((Math.abs(c.contribution) / maxAbs) * 100).toFixed(1) : "0";
    const direction = c.contribution < 0 ? "neg" : "pos";
    return [
      `<li class="contribution">`,
      `<span class="contribution-feature">${escapeHtml(c.feature)}</span>`,
      `<span class="contribution-bar"><span class="contribution-bar-fill ${direction}" style="width:${width}%"></span></span>`,
      `<span class="contribution-value">${escapeHtml(String(c.contribution))}</span>`,
      `</li>`,
    ].join("");
  });
  return `<ol class="contributions">${rows.join("")}</ol>`;
}

export function renderSuggestions(response: ScoreResponse): string {
  if (response.suggestions.length === 0) {
    return `<p class="empty-note">No suggestions. Every facet clears the bar.</p>`;
  }
  const items = response.suggestions.map((s) => {
    const chips = s.features
      .map((f) => `<span class="feature-chip">${escapeHtml(f)}</span>`)
      .join("");
    return [
      `<li class="suggestion">`,
      `<span class="suggestion-facet">${escapeHtml(s.facet)}</span>`,
      `<p class="suggestion-guideline">${escapeHtml(s.guideline)}</p>`,
      `<span class="suggestion-features">${chips}</span>`,
      `</li>`,
    ].join("");
  });
  return `<ul class="suggestions">${items.join("")}</ul>`;
}

export function renderComparison(
  deltas: FacetDelta[],
  triggeringFeatures: string[],
  labels: { before: string; after: string }
): string {
  const rows = deltas.map((d) => {
    const direction =
      d.percentileDelta > 0 ? "up" : d.percentileDelta < 0 ? "down" : "flat";
    return [
      `<tr class="delta-${direction}">`,
      `<th scope="row">${escapeHtml(d.facet)}</th>`,
      `<td>${escapeHtml(String(d.before.percentile))}</td>`,
      `<td>${escapeHtml(String(d.after.percentile))}</td>`,
      `<td class="delta-cell">${escapeHtml(signed(d.percentileDelta))}</td>`,
      `</tr>`,
    ].join("");
  });
  const marks = triggeringFeatures
    .map((f) => `<mark class="triggering-feature">${escapeHtml(f)}</mark>`)
    .join(" ");
  const footer =
    triggeringFeatures.length > 0
      ? `<p class="comparison-features">Features behind the newer revision's suggestions: ${marks}</p>`
      : "";
  return [
    `<table class="comparison">`,
    `<thead><tr><th>facet</th><th>${escapeHtml(labels.before)}</th><th>${escapeHtml(labels.after)}</th><th>change</th></tr></thead>`,
    `<tbody>${rows.join("")}</tbody>`,
    `</table>`,
    footer,
  ].join("");
}
