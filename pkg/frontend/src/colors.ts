/**
 * Conflict color mapping for the timeline overview.
 *
 * Section bars are colored purely from the server's conflict report:
 * no conflict is blue, then yellow, orange, and red as the mismatch grows.
 * A section that overflows the time limit is dark red regardless of its
 * pairwise conflict level.
 */

import type { ConflictLevel, SectionReport } from "./types.js";

export type ConflictColor = "blue" | "yellow" | "orange" | "red" | "dark-red";

const LEVEL_COLORS: Record<ConflictLevel, ConflictColor> = {
  none: "blue",
  low: "yellow",
  medium: "orange",
  high: "red",
};

/** CSS color values behind each mapping name. */
export const COLOR_VALUES: Record<ConflictColor, string> = {
  blue: "#3b82c4",
  yellow: "#e8b931",
  orange: "#e2711d",
  red: "#cc2936",
  "dark-red": "#7a1020",
};

export function colorForLevel(level: ConflictLevel, overflow: boolean): ConflictColor {
  if (overflow) {
    return "dark-red";
  }
  return LEVEL_COLORS[level];
}

export function colorForSection(report: SectionReport): ConflictColor {
  return colorForLevel(report.conflict_level, report.overflow);
}
