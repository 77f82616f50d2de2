/** Pure SVG generators. Every series point becomes exactly one countable
 * element (class "pt" for series points, "bar" for bars), so what is on
 * screen is checkable against what the API returned. Numbers are displayed
 * verbatim; rounding happens only in labels. */

import { EMOTIONS } from "./types.js";
import type {
  BreakdownEntry, EmotionPoint, SentimentPoint, TopicsResponse,
} from "./types.js";

const W = 720;
const H = 260;
const PAD = 36;

const EMOTION_COLORS: Record<string, string> = {
  anger: "#d64545", fear: "#7b4fd6", sadness: "#4073bf", disgust: "#5e9e42",
  surprise: "#d69a3c", anticipation: "#d66a28", trust: "#3aa6a6",
  joy: "#e8c531",
};

function esc(text: string): string {
  return text.replace(/&/g, "&amp;").replace(/</g, "&lt;").replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

function xPos(i: number, n: number): number {
  const span = W - 2 * PAD;
  return n <= 1 ? PAD + span / 2 : PAD + (span * i) / (n - 1);
}

function fmt(value: number): string {
  return Number.isInteger(value) ? String(value) : value.toFixed(3);
}

/** Sentiment over time: mean line plus a positivity/negativity band. */
export function sentimentChart(points: SentimentPoint[]): string {
  const values = points.flatMap((p) =>
    p.mean === null ? [] : [p.mean, p.positivity ?? 0, -(p.negativity ?? 0)]);
  const lo = Math.min(-0.5, ...values);
  const hi = Math.max(0.5, ...values);
  const yPos = (v: number): number =>
    H - PAD - ((v - lo) / (hi - lo)) * (H - 2 * PAD);

  const band: string[] = [];
  const line: string[] = [];
  const marks: string[] = [];
  points.forEach((p, i) => {
    const x = xPos(i, points.length);
    if (p.mean !== null) {
      band.push(`${x},${yPos(p.positivity ?? 0)}`);
      line.push(`${x},${yPos(p.mean)}`);
    }
    const title = p.mean === null
      ? `${p.period}: no data`
      : `${p.period}: mean ${fmt(p.mean)} (+${fmt(p.positivity ?? 0)} / -${fmt(p.negativity ?? 0)}, n=${p.count})`;
    marks.push(
      `<circle class="pt" data-period="${esc(p.period)}" cx="${x}" ` +
      `cy="${p.mean === null ? yPos(0) : yPos(p.mean)}" r="${p.mean === null ? 2 : 4}"` +
      `${p.mean === null ? ' fill="#bbb"' : ' fill="#2b5fb0"'}>` +
      `<title>${esc(title)}</title></circle>`,
    );
  });
  for (let i = points.length - 1; i >= 0; i--) {
    const p = points[i]!;
    if (p.mean !== null) {
      band.push(`${xPos(i, points.length)},${yPos(-(p.negativity ?? 0))}`);
    }
  }
  const zero = yPos(0);
  return `<svg viewBox="0 0 ${W} ${H}" role="img">` +
    `<line x1="${PAD}" y1="${zero}" x2="${W - PAD}" y2="${zero}" stroke="#999" stroke-dasharray="4 3"/>` +
    (band.length ? `<polygon points="${band.join(" ")}" fill="#2b5fb0" opacity="0.12"/>` : "") +
    (line.length ? `<polyline points="${line.join(" ")}" fill="none" stroke="#2b5fb0" stroke-width="2"/>` : "") +
    marks.join("") +
    axisLabels(points.map((p) => p.period)) +
    `</svg>`;
}

/** Emotions by period: one stacked bar per period, 8 segments each. */
export function emotionsChart(points: EmotionPoint[]): string {
  const bars: string[] = [];
  const barWidth = Math.min(48, (W - 2 * PAD) / Math.max(points.length, 1) * 0.7);
  points.forEach((p, i) => {
    const x = xPos(i, points.length) - barWidth / 2;
    let y = H - PAD;
    const segments: string[] = [];
    if (p.count > 0 && p.anger !== null) {
      for (const emotion of EMOTIONS) {
        const value = p[emotion] ?? 0;
        const height = value * (H - 2 * PAD);
        y -= height;
        segments.push(
          `<rect class="seg" x="${x}" y="${y}" width="${barWidth}" ` +
          `height="${height}" fill="${EMOTION_COLORS[emotion]}">` +
          `<title>${esc(`${p.period} ${emotion}: ${fmt(value)}`)}</title></rect>`,
        );
      }
    }
    bars.push(
      `<g class="pt" data-period="${esc(p.period)}">${segments.join("")}</g>`,
    );
  });
  return `<svg viewBox="0 0 ${W} ${H}" role="img">${bars.join("")}` +
    axisLabels(points.map((p) => p.period)) + `</svg>`;
}

/** Ranked horizontal bars for word/count pairs (co-occurrence, topics). */
export function wordBars(
  pairs: { label: string; value: number }[],
  color = "#3aa6a6",
): string {
  const rowH = 22;
  const height = Math.max(pairs.length * rowH + 8, 30);
  const max = Math.max(1, ...pairs.map((p) => p.value));
  const rows = pairs.map((p, i) => {
    const width = (p.value / max) * (W - 220);
    const y = 4 + i * rowH;
    return `<g class="bar" data-label="${esc(p.label)}">` +
      `<text x="150" y="${y + 14}" text-anchor="end" font-size="12">${esc(p.label)}</text>` +
      `<rect x="158" y="${y + 3}" width="${width}" height="${rowH - 8}" fill="${color}"/>` +
      `<text x="${162 + width}" y="${y + 14}" font-size="11">${fmt(p.value)}</text>` +
      `</g>`;
  });
  return `<svg viewBox="0 0 ${W} ${height}" role="img">${rows.join("")}</svg>`;
}

/** Country breakdown with attributable-share labels. */
export function breakdownBars(
  countries: Record<string, BreakdownEntry>,
  unknown: number,
): string {
  const pairs = Object.entries(countries)
    .sort((a, b) => b[1].count - a[1].count)
    .map(([country, entry]) => ({
      label: entry.fraction === null
        ? country
        : `${country} (${(entry.fraction * 100).toFixed(0)}%)`,
      value: entry.count,
    }));
  if (unknown > 0) pairs.push({ label: "unknown", value: unknown });
  return wordBars(pairs, "#d69a3c");
}

/** Topic cards: ranked word lists, one card per topic. */
export function topicCards(body: TopicsResponse): string {
  return body.topics.map((topic) => {
    const words = topic.words
      .map(([term, prob]) =>
        `<li><span class="term">${esc(term)}</span>` +
        `<span class="prob">${prob.toFixed(3)}</span></li>`)
      .join("");
    return `<article class="topic-card pt" data-topic="${topic.topic}">` +
      `<h4>topic ${topic.topic}</h4><ol>${words}</ol></article>`;
  }).join("");
}

function axisLabels(periods: string[]): string {
  const step = Math.max(1, Math.ceil(periods.length / 12));
  return periods
    .map((period, i) => ({ period, i }))
    .filter(({ i }) => i % step === 0)
    .map(({ period, i }) =>
      `<text x="${xPos(i, periods.length)}" y="${H - 10}" font-size="10" ` +
      `text-anchor="middle" fill="#555">${esc(period)}</text>`)
    .join("");
}
