"""Prompt templates for the two jargon-pipeline stages.

The template text is fixed; rendering only substitutes the ``${...}``
placeholders (including the two list blocks and the optional presentation
context line) in a single pass, so substituted values are never re-scanned
for further placeholders.
"""

from __future__ import annotations

import re

AUDIENCE_EXPANSION_TEMPLATE = r"""You are an expert at understanding audience descriptions for presentations.
Analyze this audience description and provide detailed context that will help with jargon detection.

ORIGINAL AUDIENCE DESCRIPTION: "${originalDescription}"
USER-PROVIDED EXPERTISE LEVEL: ${userExpertiseLevel}/5

Your task: Expand this into a detailed profile that clearly explains what this audience would and would not know.

Respond in JSON format:
{
  "expandedDescription": "Detailed 2-3 sentence description of their background and knowledge level",
  "inferredExpertiseLevel": number (1-5, can adjust user's estimate if clearly wrong),
  "knownConcepts": ["concept1", "concept2", "concept3"],
  "likelyJargon": ["term1", "term2", "term3"],
  "domainBackground": "Their field/industry background"
}

EXAMPLES:

Input: "NLP professor"
Output: {
  "expandedDescription": "Computer Science professor specializing in Natural Language Processing research. Has PhD-level expertise in machine learning, deep learning, linguistics, and computational methods. Familiar with all standard ML algorithms, programming concepts, and academic research terminology.",
  "inferredExpertiseLevel": 5,
  "knownConcepts": ["machine learning", "neural networks", "transformers", "BERT", "random forest", "SVM", "tokenization", "embeddings", "algorithms", "APIs", "frameworks", "deep learning", "statistical models"],
  "likelyJargon": ["novel architectures from 2024", "proprietary model names", "company-specific tools", "bleeding-edge research terms"],
  "domainBackground": "Computer Science academia with focus on NLP/AI research"
}

Input: "undergrad freshman no programming experience"
Output: {
  "expandedDescription": "First-year undergraduate student with no prior programming or computer science background. Familiar with basic technology use (smartphones, apps, social media) but unfamiliar with technical concepts, programming terminology, or how software systems work.",
  "inferredExpertiseLevel": 1,
  "knownConcepts": ["apps", "websites", "social media", "AI tools like ChatGPT", "smartphones", "basic internet concepts"],
  "likelyJargon": ["programming terms", "algorithms", "databases", "machine learning", "neural networks", "APIs", "coding concepts"],
  "domainBackground": "General education, non-technical"
}

Be specific about what they would know vs. what would be jargon.
Focus on their domain expertise."""

JARGON_DETECTION_TEMPLATE = r"""Analyze this slide content for jargon terms that would confuse the specified audience.

AUDIENCE PROFILE:
- Original Description: "${expandedContext.originalDescription}"
- Detailed Profile: ${expandedContext.expandedDescription}
- Expertise Level: ${expandedContext.inferredExpertiseLevel}/5
- Domain Background: ${expandedContext.domainBackground}
${presentationContext ? `- Presentation Context: ${presentationContext}` : ''}

WHAT THIS AUDIENCE KNOWS:
${expandedContext.knownConcepts.length > 0
            ? expandedContext.knownConcepts.map(concept => `- ${concept}`).join('\n')
            : '- No specific known concepts provided'}

LIKELY JARGON FOR THIS AUDIENCE:
${expandedContext.likelyJargon.length > 0
            ? expandedContext.likelyJargon.map(jargon => `- ${jargon}`).join('\n')
            : '- No specific jargon areas identified'}

SLIDE CONTENT TO ANALYZE:
Title: ${slideTitle || 'Untitled'}
Content: ${slideText}

CRITICAL INSTRUCTIONS:
1. Use the detailed audience profile to determine what would be jargon
2. If a term is in the "WHAT THIS AUDIENCE KNOWS" list, it's NOT jargon
3. If a term is similar to items in "LIKELY JARGON" list, it probably IS jargon
4. Consider the expertise level (${expandedContext.inferredExpertiseLevel}/5) carefully
5. Only flag terms that would genuinely prevent understanding

EXPERTISE LEVEL GUIDELINES:
- Level 1-2: Most technical terms are jargon, but common tech words (AI, app, website) are okay
- Level 3: Specialized and domain-specific terms are jargon
- Level 4: Only cutting-edge or highly specialized terms are jargon
- Level 5: Only the most novel, bleeding-edge, or extremely specialized terms are jargon

IMPORTANT:
- For professors/experts (Level 4-5): Very few terms should be jargon
- For beginners (Level 1-2): Many technical terms will be jargon
- Focus on the audience's specific domain background: ${expandedContext.domainBackground}

Respond with JSON only (no markdown):
{
  "jargonTerms": [
    {
      "term": "exact term from text",
      "definition": "Clear explanation appropriate for this audience",
      "alternatives": ["simpler alternative 1", "accessible phrase 2"],
      "startIndex": number,
      "endIndex": number
    }
  ]
}"""

# The IMPORTANT heading ends with a trailing space. Editors strip trailing
# whitespace from source files, so it is restored here instead of being
# embedded in the literal above.
JARGON_DETECTION_TEMPLATE = JARGON_DETECTION_TEMPLATE.replace(
    "\nIMPORTANT:\n", "\nIMPORTANT: \n"
)

_PRESENTATION_CONTEXT_LINE = (
    "${presentationContext ? `- Presentation Context: ${presentationContext}` : ''}"
)

_KNOWN_CONCEPTS_BLOCK = r"""${expandedContext.knownConcepts.length > 0
            ? expandedContext.knownConcepts.map(concept => `- ${concept}`).join('\n')
            : '- No specific known concepts provided'}"""

_LIKELY_JARGON_BLOCK = r"""${expandedContext.likelyJargon.length > 0
            ? expandedContext.likelyJargon.map(jargon => `- ${jargon}`).join('\n')
            : '- No specific jargon areas identified'}"""


def _substitute(template: str, mapping: dict[str, str]) -> str:
    """Replace every placeholder in one pass, longest placeholders first."""
    keys = sorted(mapping, key=len, reverse=True)
    pattern = re.compile("|".join(re.escape(k) for k in keys))
    return pattern.sub(lambda m: mapping[m.group(0)], template)


def _bullet_list(items, fallback: str) -> str:
    items = [str(i) for i in items]
    if not items:
        return fallback
    return "\n".join(f"- {item}" for item in items)


def render_audience_expansion_prompt(original_description: str, user_expertise_level: int) -> str:
    return _substitute(
        AUDIENCE_EXPANSION_TEMPLATE,
        {
            "${originalDescription}": original_description,
            "${userExpertiseLevel}": str(user_expertise_level),
        },
    )


def render_jargon_detection_prompt(
    context,
    slide_title: str | None,
    slide_text: str,
    presentation_context: str | None = None,
) -> str:
    """Render the detection prompt for an ExpandedAudienceContext and slide.

    When no presentation context is given its line renders empty, exactly as
    the conditional in the template collapses to the empty string.
    """
    mapping = {
        _KNOWN_CONCEPTS_BLOCK: _bullet_list(
            context.known_concepts, "- No specific known concepts provided"
        ),
        _LIKELY_JARGON_BLOCK: _bullet_list(
            context.likely_jargon, "- No specific jargon areas identified"
        ),
        _PRESENTATION_CONTEXT_LINE: (
            f"- Presentation Context: {presentation_context}" if presentation_context else ""
        ),
        "${expandedContext.originalDescription}": context.original_description,
        "${expandedContext.expandedDescription}": context.expanded_description,
        "${expandedContext.inferredExpertiseLevel}": str(context.inferred_expertise_level),
        "${expandedContext.domainBackground}": context.domain_background,
        "${slideTitle || 'Untitled'}": slide_title if slide_title else "Untitled",
        "${slideText}": slide_text,
    }
    return _substitute(JARGON_DETECTION_TEMPLATE, mapping)
